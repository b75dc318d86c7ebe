from .evaluation import evaluation_controller as evaluation_controller
from .model import model_controller as model_controller
