"""
Tests de la distancia de Jousselme y de las distancias objeto-clúster
"""
import numpy as np
import pytest

import config
from mass_core import categorical, vacuous
from metrics import DistanceMatrix, jousselme_distance, object_to_cluster_distance, pairwise_distances
from models.errores import EmptyInputError, EvidenciaError, FrameMismatchError
from models.frame import Frame


class TestJousselme:
    def test_misma_masa(self, m1):
        assert jousselme_distance(m1, m1) == 0.0

    def test_categoricas_disjuntas(self, abc):
        assert jousselme_distance(categorical(abc, "a"), categorical(abc, "b")) == pytest.approx(1.0)

    def test_m1_m2(self, m1, m2):
        assert jousselme_distance(m1, m2) == pytest.approx(0.1414, abs=5e-5)

    def test_marcos_distintos(self, m1):
        with pytest.raises(FrameMismatchError):
            jousselme_distance(m1, vacuous(Frame(("a", "b"))))

    def test_es_una_metrica(self, masa_factory):
        rng = np.random.default_rng(29)
        frame = Frame.of_size(4)
        for _ in range(200):
            a, b, c = (masa_factory(rng, frame, dogmatica=bool(rng.integers(2))) for _ in range(3))
            ab = jousselme_distance(a, b)
            assert ab == pytest.approx(jousselme_distance(b, a), abs=1e-12)
            assert 0.0 <= ab <= 1.0 + 1e-12
            assert ab <= jousselme_distance(a, c) + jousselme_distance(c, b) + 1e-9

    def test_forma_focal_coincide_con_densa(self, monkeypatch, masa_factory):
        rng = np.random.default_rng(31)
        frame = Frame.of_size(4)
        pares = [(masa_factory(rng, frame), masa_factory(rng, frame)) for _ in range(20)]
        densas = [jousselme_distance(a, b) for a, b in pares]
        monkeypatch.setitem(config.FUSION_CONFIG, 'jousselme_denso_max', 2)
        focales = [jousselme_distance(a, b) for a, b in pares]
        assert focales == pytest.approx(densas, abs=1e-12)


class TestMatrizDeDistancias:
    def test_identicas(self, m1):
        assert np.all(pairwise_distances([m1] * 4).values == 0.0)

    def test_dos_masas(self, m1, m2):
        D = pairwise_distances([m1, m2])
        assert D.n == 2
        assert D[0, 1] == pytest.approx(jousselme_distance(m1, m2))
        assert D[1, 0] == D[0, 1]

    def test_singletons_distintos(self, abc):
        D = pairwise_distances([categorical(abc, x) for x in "abc"])
        fuera = D.values[~np.eye(3, dtype=bool)]
        assert fuera == pytest.approx(np.ones(6))

    def test_coincide_con_pares(self, masa_factory):
        rng = np.random.default_rng(37)
        frame = Frame.of_size(3)
        masas = [masa_factory(rng, frame) for _ in range(15)]
        D = pairwise_distances(masas)
        for i in range(15):
            assert D[i, i] == 0.0
            for j in range(15):
                assert D[i, j] == pytest.approx(jousselme_distance(masas[i], masas[j]), abs=1e-9)

    def test_solo_lectura(self, m1, m2):
        D = pairwise_distances([m1, m2])
        with pytest.raises(ValueError):
            D.values[0, 1] = 0.5

    def test_validacion(self):
        with pytest.raises(EvidenciaError):
            DistanceMatrix(np.array([[0.0, 0.1], [0.2, 0.0]]))
        with pytest.raises(EvidenciaError):
            DistanceMatrix(np.array([[0.1, 0.1], [0.1, 0.0]]))

    def test_lista_vacia(self):
        with pytest.raises(EmptyInputError):
            pairwise_distances([])


class TestDistanciaObjetoCluster:
    @pytest.fixture
    def D(self):
        return DistanceMatrix(np.array([
            [0.0, 0.2, 0.4],
            [0.2, 0.0, 0.6],
            [0.4, 0.6, 0.0],
        ]))

    def test_solo_el_objeto(self, D):
        assert object_to_cluster_distance(0, [0], D) == 0.0

    def test_otro_objeto(self, D):
        assert object_to_cluster_distance(0, [2], D) == pytest.approx(0.4)

    def test_media(self, D):
        assert object_to_cluster_distance(0, [1, 2], D) == pytest.approx(0.3)

    def test_incluye_la_distancia_propia(self, D):
        assert object_to_cluster_distance(0, [0, 1, 2], D) == pytest.approx(0.2)

    def test_cluster_vacio(self, D):
        with pytest.raises(EmptyInputError):
            object_to_cluster_distance(0, [], D)

    def test_indice_fuera(self, D):
        with pytest.raises(EvidenciaError):
            object_to_cluster_distance(3, [0], D)
