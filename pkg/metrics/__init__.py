"""
Módulo de distancias entre funciones de masa
"""
from models.particion import DistanceMatrix
from .jousselme import jousselme_distance, pairwise_distances, object_to_cluster_distance

__all__ = ['DistanceMatrix', 'jousselme_distance', 'pairwise_distances', 'object_to_cluster_distance']
