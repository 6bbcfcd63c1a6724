from .params import LossParams, TernaryLabel, calibrated_params
from .pointwise import loss_01, loss_01c, loss_01cd, loss_hinge, loss_mh, loss_mha

__all__ = [
    "LossParams",
    "TernaryLabel",
    "calibrated_params",
    "loss_01",
    "loss_01c",
    "loss_01cd",
    "loss_hinge",
    "loss_mh",
    "loss_mha",
]
