from .basis import BasisSet, design_matrix
from .laplacian import GraphLaplacian, graph_laplacian

__all__ = ["BasisSet", "GraphLaplacian", "design_matrix", "graph_laplacian"]
