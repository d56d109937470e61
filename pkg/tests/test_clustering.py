"""
Tests del agrupamiento evidencial
"""
import numpy as np
import pytest

from clustering import ClusterPartition, cluster, cluster_distances, default_k, objective
from mass_core import simple_support
from metrics import pairwise_distances
from models.errores import EvidenciaError
from models.frame import Frame


def grupos(rng, frame, tamanos):
    """Masas de soporte simple muy concentradas en una hipótesis distinta por grupo"""
    masas, etiquetas = [], []
    for g, tamano in enumerate(tamanos):
        for _ in range(tamano):
            masas.append(simple_support(frame, frame.labels[g], float(rng.uniform(0.05, 0.25))))
            etiquetas.append(g)
    orden = rng.permutation(len(masas))
    return [masas[i] for i in orden], [etiquetas[i] for i in orden]


def como_conjuntos(particion: ClusterPartition):
    return {frozenset(miembros) for miembros in particion.clusters()}


def grupos_esperados(etiquetas):
    return {frozenset(i for i, e in enumerate(etiquetas) if e == g) for g in set(etiquetas)}


class TestCasosTriviales:
    def test_un_cluster(self, masa_factory):
        rng = np.random.default_rng(1)
        masas = [masa_factory(rng, Frame.of_size(3)) for _ in range(12)]
        particion = cluster(masas, 1)
        assert particion.assignment == (0,) * 12
        assert particion.sizes == [12]
        assert particion.convergida

    def test_k_igual_a_n_es_la_identidad(self, masa_factory):
        rng = np.random.default_rng(2)
        masas = [masa_factory(rng, Frame.of_size(3)) for _ in range(6)]
        particion = cluster(masas, 6, seed=99)
        assert particion.assignment == tuple(range(6))

    def test_k_mayor_que_n(self, m1, m2):
        with pytest.raises(EvidenciaError):
            cluster([m1, m2], 3)

    def test_k_cero(self, m1, m2):
        with pytest.raises(EvidenciaError):
            cluster([m1, m2], 0)

    def test_k_por_defecto(self, abc):
        assert default_k(abc) == 3
        assert default_k(Frame.of_size(5)) == 5


class TestGruposSeparados:
    def test_dos_grupos(self):
        rng = np.random.default_rng(7)
        masas, etiquetas = grupos(rng, Frame.of_size(3), (7, 13))
        particion = cluster(masas, 2, seed=11, n_init=5)
        assert particion.convergida
        assert sorted(particion.sizes) == [7, 13]
        assert como_conjuntos(particion) == grupos_esperados(etiquetas)

    def test_tres_grupos_con_reinicios(self):
        rng = np.random.default_rng(13)
        masas, etiquetas = grupos(rng, Frame.of_size(4), (5, 7, 11))
        particion = cluster(masas, 3, seed=5, n_init=20)
        assert sorted(particion.sizes) == [5, 7, 11]
        assert como_conjuntos(particion) == grupos_esperados(etiquetas)


class TestPropiedades:
    @pytest.fixture
    def masas(self, masa_factory):
        rng = np.random.default_rng(21)
        return [masa_factory(rng, Frame.of_size(3)) for _ in range(40)]

    def test_determinista(self, masas):
        a = cluster(masas, 3, seed=4)
        b = cluster(masas, 3, seed=4)
        assert a.assignment == b.assignment
        assert a.iteraciones == b.iteraciones

    def test_sin_clusteres_vacios(self, masas):
        for semilla in range(10):
            assert min(cluster(masas, 4, seed=semilla).sizes) > 0

    def test_punto_fijo(self, masas):
        D = pairwise_distances(masas)
        particion = cluster_distances(D, 3, seed=8)
        assert particion.convergida
        base = objective(particion, D)
        for i, propio in enumerate(particion.assignment):
            if particion.sizes[propio] == 1:
                continue
            for destino in range(3):
                movida = list(particion.assignment)
                movida[i] = destino
                assert objective(ClusterPartition(tuple(movida), 3), D) >= base - 1e-9

    def test_punto_fijo_por_distancia_media(self, masas):
        D = pairwise_distances(masas)
        particion = cluster_distances(D, 3, seed=8, criterio="mean")
        assert particion.convergida
        clusteres = particion.clusters()
        for i, propio in enumerate(particion.assignment):
            medias = [D.values[i, miembros].mean() for miembros in clusteres]
            assert medias[propio] <= min(medias) + 1e-12

    @pytest.mark.parametrize("semilla", range(40))
    def test_objetivo_no_crece_entre_barridos(self, masa_factory, semilla):
        rng = np.random.default_rng(1000 + semilla)
        D = pairwise_distances([masa_factory(rng, Frame.of_size(3)) for _ in range(40)])
        valores = []
        for barridos in range(1, 101):
            particion = cluster_distances(D, 3, seed=semilla, max_iter=barridos)
            valores.append(objective(particion, D))
            if particion.convergida:
                break
        assert particion.convergida
        assert all(b <= a + 1e-9 for a, b in zip(valores, valores[1:]))

    def test_criterio_desconocido(self, masas):
        with pytest.raises(EvidenciaError):
            cluster(masas, 3, criterio="mode")

    def test_reinicios_no_empeoran(self, masas):
        D = pairwise_distances(masas)
        uno = cluster_distances(D, 3, seed=3)
        varios = cluster_distances(D, 3, seed=3, n_init=8)
        assert objective(varios, D) <= objective(uno, D) + 1e-12

    def test_n_init_invalido(self, masas):
        with pytest.raises(EvidenciaError):
            cluster(masas, 2, n_init=0)

    def test_max_iter_alcanzado(self, masas):
        particion = cluster(masas, 3, seed=1, max_iter=1)
        assert particion.iteraciones == 1


class TestParticion:
    def test_desde_clusteres(self):
        particion = ClusterPartition.from_clusters([[0, 2], [1]])
        assert particion.assignment == (0, 1, 0)
        assert particion.members(0) == [0, 2]
        assert particion.to_rows() == [(0, 0), (1, 1), (2, 0)]

    def test_objeto_repetido(self):
        with pytest.raises(EvidenciaError):
            ClusterPartition.from_clusters([[0, 1], [1]])

    def test_id_fuera_de_rango(self):
        with pytest.raises(EvidenciaError):
            ClusterPartition((0, 2), 2)

    def test_dict(self):
        datos = ClusterPartition((0, 1, 1), 2, iteraciones=3).to_dict()
        assert datos == {"K": 2, "assignment": [0, 1, 1], "sizes": [1, 2],
                         "iterations": 3, "converged": True}
