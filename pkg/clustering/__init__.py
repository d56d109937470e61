"""
Módulo de agrupamiento evidencial
"""
from models.particion import ClusterPartition
from .agrupador import CRITERIOS, AgrupadorEvidencial, cluster, cluster_distances, default_k, objective

__all__ = ['ClusterPartition', 'CRITERIOS', 'AgrupadorEvidencial', 'cluster', 'cluster_distances', 'default_k', 'objective']
