from .model import Prediction, TrainedModel, predict, predict_batch, predict_labels
from .registry import METHODS_REGISTRY, MethodSpec, get_method
from .risk import binary_accuracy, empirical_01cd_risk, empirical_surrogate_risk
from .schema import TrainedModelSchema, load_model, save_model
from .trainers import (
    CAD_SVM,
    CRO_SVM,
    CRO_SVM_RL,
    LAPSVM,
    SVM,
    SVM_RL,
    TWO_STEP_SVM,
    relabel_ambiguous,
    train_cad_svm,
    train_cro_svm,
    train_cro_svm_rl,
    train_lapsvm,
    train_svm,
    train_svm_rl,
    train_two_step,
)

__all__ = [
    "CAD_SVM",
    "CRO_SVM",
    "CRO_SVM_RL",
    "LAPSVM",
    "METHODS_REGISTRY",
    "MethodSpec",
    "Prediction",
    "SVM",
    "SVM_RL",
    "TWO_STEP_SVM",
    "TrainedModel",
    "TrainedModelSchema",
    "binary_accuracy",
    "empirical_01cd_risk",
    "empirical_surrogate_risk",
    "get_method",
    "load_model",
    "predict",
    "predict_batch",
    "predict_labels",
    "relabel_ambiguous",
    "save_model",
    "train_cad_svm",
    "train_cro_svm",
    "train_cro_svm_rl",
    "train_lapsvm",
    "train_svm",
    "train_svm_rl",
    "train_two_step",
]
