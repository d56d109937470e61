"""
Tests de los generadores de masas y de la derivación de semillas
"""
import numpy as np
import pytest

from generators import (
    decision_of,
    derive_seed,
    gen_consistent,
    gen_dependent,
    gen_independent,
    stick_breaking,
)
from mass_core import is_consistent, vacuous
from models.errores import EvidenciaError, LengthMismatchError
from models.frame import Frame


class TestStickBreaking:
    def test_una_pieza(self):
        assert stick_breaking(np.random.default_rng(0), 1).tolist() == [1.0]

    def test_suma_uno(self):
        rng = np.random.default_rng(1)
        for piezas in range(1, 20):
            longitudes = stick_breaking(rng, piezas)
            assert len(longitudes) == piezas
            assert longitudes.sum() == pytest.approx(1.0)
            assert np.all(longitudes >= 0.0)


class TestIndependiente:
    def test_masas_validas(self):
        frame = Frame.of_size(3)
        for m in gen_independent(frame, 200, seed=2):
            assert sum(m.masses.values()) == pytest.approx(1.0)
            assert 1 <= len(m.masses) <= frame.n_subsets - 1
            assert 0 not in m.masses

    def test_numero_medio_de_focales(self):
        frame = Frame.of_size(3)
        cuantos = [len(m.masses) for m in gen_independent(frame, 4000, seed=3)]
        assert min(cuantos) == 1
        assert max(cuantos) == 7
        assert np.mean(cuantos) == pytest.approx(4.0, abs=0.15)

    def test_determinista(self):
        frame = Frame.of_size(4)
        assert gen_independent(frame, 20, 7) == gen_independent(frame, 20, 7)
        assert gen_independent(frame, 20, 7) != gen_independent(frame, 20, 8)

    def test_n_cero(self):
        with pytest.raises(EvidenciaError):
            gen_independent(Frame.of_size(2), 0, 1)


class TestConsistente:
    def test_focales_contienen_el_ancla(self):
        frame = Frame.of_size(4)
        masas, anclas = gen_consistent(frame, 300, seed=4)
        assert len(anclas) == 300
        for m, ancla in zip(masas, anclas):
            assert not ancla.is_empty
            assert all(b & ancla.bits == ancla.bits for b in m.masses)
            assert is_consistent(m)


class TestDependiente:
    def test_focales_contienen_la_decision(self, abc):
        decisiones = ["a", "b|c", "*", "c"] * 25
        masas = gen_dependent(abc, 100, decisiones, seed=5)
        for m, decision in zip(masas, decisiones):
            bits = abc.parse_bits(decision)
            assert all(b & bits == bits for b in m.masses)

    def test_decision_omega_es_vacua(self, abc):
        assert gen_dependent(abc, 1, ["*"], seed=1)[0] == vacuous(abc)

    def test_longitudes_distintas(self, abc):
        with pytest.raises(LengthMismatchError):
            gen_dependent(abc, 3, ["a", "b"], seed=1)

    def test_decision_vacia(self, abc):
        with pytest.raises(EvidenciaError):
            gen_dependent(abc, 1, ["{}"], seed=1)

    def test_desde_anclas(self):
        frame = Frame.of_size(3)
        _, anclas = gen_consistent(frame, 50, seed=6)
        dependientes = gen_dependent(frame, 50, anclas, seed=7)
        for m, ancla in zip(dependientes, anclas):
            assert all(b & ancla.bits == ancla.bits for b in m.masses)


class TestDecision:
    def test_mayor_pignistica(self, m2):
        assert decision_of(m2).labels() == ["a"]

    def test_empate_por_orden_del_marco(self, abc):
        assert decision_of(vacuous(abc)).labels() == ["a"]


class TestSemillas:
    def test_determinista(self):
        assert derive_seed(2014, 3, 1) == derive_seed(2014, 3, 1)

    def test_contadores_distintos(self):
        semillas = {derive_seed(2014, t, s) for t in range(20) for s in range(3)}
        assert len(semillas) == 60

    def test_orden_de_contadores(self):
        assert derive_seed(1, 0, 1) != derive_seed(1, 1, 0)

    def test_rango(self):
        for t in range(50):
            semilla = derive_seed(99, t)
            assert 0 <= semilla < 2 ** 63
            np.random.default_rng(semilla)
