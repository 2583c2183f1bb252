"""Ex-centric circular (supermathematics) functions, curves and mechanisms."""
from .core import (
    CENTRIC,
    FIRST,
    SECOND,
    Aex,
    Cel_Sel,
    Cex,
    Cex_Sex,
    Determination,
    Dex,
    EvalError,
    ExCenter,
    Phasor,
    PlanePoint,
    Rex,
    Sex,
    aex,
    cel_sel,
    cex,
    cex_sex,
    delta,
    dex,
    rad_der,
    rex,
    sex,
    tex,
    w_point,
    w_velocity,
)

__version__ = "0.1.0"
