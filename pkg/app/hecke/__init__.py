from .operators import (
    HeckeContext,
    IndexOutOfRange,
    OperatorExpr,
    cherednik_word,
    cherednik_Y,
    noumi_T,
    noumi_T_inverse,
    weyl_act,
)
