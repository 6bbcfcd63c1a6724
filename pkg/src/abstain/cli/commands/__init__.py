from .evaluate import evaluate, reproduce
from .export import decision_map, loss_curves, project_2d
from .generate import generate
from .predict import predict
from .theory import verify_theory
from .train import train

COMMANDS = [
    generate,
    train,
    predict,
    evaluate,
    reproduce,
    verify_theory,
    project_2d,
    loss_curves,
    decision_map,
]

__all__ = ["COMMANDS"]
