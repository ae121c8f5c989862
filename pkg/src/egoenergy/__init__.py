"""Matrix energies of egocentric networks compared with classical vertex centralities."""

__version__ = "0.1.0"

from .graph import Graph, EgoNetwork, build_graph, ego_network, connected_components  # noqa: E402
from .spectral import EnergyTriple, ego_energies, graph_energy, laplacian_energy, randic_energy  # noqa: E402
from .centrality import FEATURES, VertexFeatures, features_all  # noqa: E402

__all__ = [
    "Graph", "EgoNetwork", "build_graph", "ego_network", "connected_components",
    "EnergyTriple", "ego_energies", "graph_energy", "randic_energy", "laplacian_energy",
    "FEATURES", "VertexFeatures", "features_all",
]
