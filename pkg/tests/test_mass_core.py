"""
Tests de las funciones de masa y sus transformaciones
"""
import pickle

import numpy as np
import pytest

from mass_core import (
    MassFunction,
    WeightFunction,
    belief,
    canonical_decompose,
    categorical,
    commonality,
    commonality_vector,
    conflict,
    core,
    dempster_normalize,
    discount,
    focal_elements,
    from_commonality,
    is_consistent,
    is_dogmatic,
    pignistic,
    plausibility,
    prediscount,
    recompose,
    simple_support,
    vacuous,
)
from mass_core.mobius import mobius_superconjuntos, zeta_superconjuntos
from models.errores import (
    DogmaticMassError,
    EvidenciaError,
    FrameMismatchError,
    InvalidMassError,
    OutOfRangeError,
    TotalConflictError,
)
from models.frame import Frame


class TestMassFunction:
    def test_suma_distinta_de_uno(self, abc):
        with pytest.raises(InvalidMassError):
            MassFunction.from_labels(abc, {"a": 0.5, "b": 0.4})

    def test_masa_negativa(self, abc):
        with pytest.raises(InvalidMassError):
            MassFunction.from_labels(abc, {"a": 1.2, "b": -0.2})

    def test_nan(self, abc):
        with pytest.raises(InvalidMassError):
            MassFunction(abc, {1: float("nan"), 7: 1.0})

    def test_descarta_ceros(self, abc):
        m = MassFunction.from_labels(abc, {"a": 0.0, "*": 1.0})
        assert m.focal_bits() == [abc.omega]

    def test_mundo_abierto(self, abc):
        m = MassFunction.from_labels(abc, {"{}": 0.2, "*": 0.8})
        assert conflict(m) == pytest.approx(0.2)

    def test_from_dict_renormaliza(self):
        m = MassFunction.from_dict({"frame": ["a", "b"], "masses": {"a": 0.3000001, "a|b": 0.7}})
        assert sum(m.masses.values()) == pytest.approx(1.0, abs=1e-12)

    def test_from_dict_fuera_de_tolerancia(self):
        with pytest.raises(InvalidMassError):
            MassFunction.from_dict({"frame": ["a", "b"], "masses": {"a": 0.3, "a|b": 0.6}})

    def test_from_dict_sin_claves(self):
        with pytest.raises(InvalidMassError):
            MassFunction.from_dict({"masses": {"a": 1.0}})

    def test_dict_json(self, m1):
        datos = m1.to_dict()
        assert datos["frame"] == ["a", "b", "c"]
        assert datos["masses"] == {"a": 0.3, "c": 0.2, "a|c": 0.2, "a|b|c": 0.3}
        assert MassFunction.from_dict(datos).masses == m1.masses

    def test_vector_denso(self, m1):
        vector = m1.to_dense()
        assert vector.shape == (8,)
        assert MassFunction.from_dense(m1.frame, vector).masses == m1.masses

    def test_pickle(self, m1):
        copia = pickle.loads(pickle.dumps(m1))
        assert copia == m1

    def test_acceso_por_texto(self, m1):
        assert m1["a|c"] == pytest.approx(0.2)
        assert m1["b"] == 0.0


class TestConsultas:
    def test_focales_y_nucleo(self, m2):
        assert [s.labels() for s in focal_elements(m2)] == [["a"], ["a", "c"], ["a", "b", "c"]]
        assert core(m2).is_full

    def test_dogmatica(self, abc, m1):
        assert not is_dogmatic(m1)
        assert is_dogmatic(categorical(abc, "a"))

    def test_consistente(self, abc, m1, m2):
        assert is_consistent(m2)
        assert not is_consistent(m1)
        assert is_consistent(vacuous(abc))


class TestFuncionesDerivadas:
    def test_belief(self, abc, m1):
        assert belief(m1, "a|c") == pytest.approx(0.7)
        assert belief(m1, "{}") == 0.0
        assert belief(vacuous(abc), "*") == 1.0

    def test_plausibility(self, m1):
        assert plausibility(m1, "b") == pytest.approx(0.3)
        assert plausibility(m1, "{}") == 0.0
        assert plausibility(m1, "*") == pytest.approx(1.0)

    def test_commonality(self, abc, m1):
        assert commonality(m1, "a") == pytest.approx(0.8)
        assert commonality(m1, "{}") == pytest.approx(1.0)
        assert commonality(vacuous(abc), "b|c") == 1.0

    def test_commonality_vector_coincide(self, m1):
        q = commonality_vector(m1)
        for bits in range(8):
            assert q[bits] == pytest.approx(commonality(m1, bits))
        assert from_commonality(m1.frame, q).masses.keys() == m1.masses.keys()

    def test_marcos_distintos(self, m1):
        with pytest.raises(FrameMismatchError):
            belief(m1, Frame(("x", "y", "z")).parse("x"))


class TestPignistica:
    def test_m2(self, m2):
        assert pignistic(m2) == pytest.approx({"a": 0.6, "b": 0.1, "c": 0.3})

    def test_vacua(self):
        frame = Frame.of_size(4)
        assert list(pignistic(vacuous(frame)).values()) == pytest.approx([0.25] * 4)

    def test_categorica(self, abc):
        assert pignistic(categorical(abc, "a"))["a"] == 1.0

    def test_normaliza_el_conflicto(self, abc):
        m = MassFunction.from_labels(abc, {"{}": 0.5, "a": 0.25, "b|c": 0.25})
        assert pignistic(m) == pytest.approx({"a": 0.5, "b": 0.25, "c": 0.25})

    def test_conflicto_total(self, abc):
        with pytest.raises(TotalConflictError):
            pignistic(categorical(abc, "{}"))


class TestDescuento:
    def test_alfa_uno(self, m1):
        assert dict(discount(m1, 1.0).masses) == pytest.approx(dict(m1.masses))

    def test_alfa_cero(self, abc, m1):
        assert dict(discount(m1, 0.0).masses) == {abc.omega: 1.0}

    def test_mitad(self, m1):
        descontada = discount(m1, 0.5)
        assert descontada["a"] == pytest.approx(0.15)
        assert descontada["c"] == pytest.approx(0.1)
        assert descontada["a|c"] == pytest.approx(0.1)
        assert descontada["*"] == pytest.approx(0.65)

    def test_fuera_de_rango(self, m1):
        with pytest.raises(OutOfRangeError):
            discount(m1, 1.5)

    def test_prediscount_solo_dogmaticas(self, abc, m1):
        assert prediscount(m1, 1e-3) is m1
        descontada = prediscount(categorical(abc, "a"), 1e-3)
        assert descontada["*"] == pytest.approx(1e-3)
        assert not is_dogmatic(descontada)


class TestSoporteSimple:
    def test_sustitucion(self, abc):
        m = simple_support(abc, "a", 0.7)
        assert m["a"] == pytest.approx(0.3)
        assert m["*"] == pytest.approx(0.7)

    def test_w_uno_es_vacua(self, abc):
        assert dict(simple_support(abc, "a", 1.0).masses) == {abc.omega: 1.0}

    def test_w_cero_es_categorica(self, abc):
        assert dict(simple_support(abc, "b|c", 0.0).masses) == {0b110: 1.0}

    def test_foco_omega(self, abc):
        with pytest.raises(EvidenciaError):
            simple_support(abc, "*", 0.5)


class TestMobius:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_ida_y_vuelta(self, n):
        rng = np.random.default_rng(n)
        vector = rng.random(1 << n)
        assert mobius_superconjuntos(zeta_superconjuntos(vector)) == pytest.approx(vector)

    def test_longitud_no_potencia_de_dos(self):
        with pytest.raises(ValueError):
            zeta_superconjuntos(np.ones(6))


class TestDescomposicion:
    def test_soporte_simple(self, abc):
        w = canonical_decompose(simple_support(abc, "a", 0.7))
        assert dict(w.weights) == pytest.approx({0b001: 0.7})

    def test_vacua_sin_pesos(self, abc):
        assert dict(canonical_decompose(vacuous(abc)).weights) == {}

    def test_dogmatica(self, abc):
        with pytest.raises(DogmaticMassError):
            canonical_decompose(categorical(abc, "a"))

    def test_m1(self, m1):
        w = canonical_decompose(m1)
        assert w["a|c"] == pytest.approx(0.6)
        assert w["a"] == pytest.approx(0.625)
        assert w["c"] == pytest.approx(5 / 7)
        assert w["{}"] == pytest.approx(1.12)
        assert w["b"] == pytest.approx(1.0)
        assert w["b|c"] == pytest.approx(1.0)

    def test_pesos_mayores_que_uno_admitidos(self, m1):
        assert max(canonical_decompose(m1).weights.values()) > 1.0

    def test_ida_y_vuelta_aleatoria(self, masa_factory):
        rng = np.random.default_rng(2014)
        for n in (2, 3, 4, 5):
            frame = Frame.of_size(n)
            for _ in range(250):
                m = masa_factory(rng, frame)
                recompuesta = recompose(canonical_decompose(m))
                for bits in range(frame.n_subsets):
                    assert recompuesta[bits] == pytest.approx(m[bits], abs=1e-9)

    def test_dict_json(self, m1):
        w = canonical_decompose(m1)
        assert dict(WeightFunction.from_dict(w.to_dict()).weights) == pytest.approx(dict(w.weights))

    def test_pesos_no_positivos(self, abc):
        with pytest.raises(EvidenciaError):
            WeightFunction(abc, {1: 0.0})
        with pytest.raises(EvidenciaError):
            WeightFunction(abc, {abc.omega: 0.5})


class TestNormalizacion:
    def test_reparte_el_vacio(self, abc):
        m = MassFunction.from_labels(abc, {"{}": 0.2, "a": 0.4, "*": 0.4})
        normalizada = dempster_normalize(m)
        assert normalizada["{}"] == 0.0
        assert normalizada["a"] == pytest.approx(0.5)
        assert normalizada["*"] == pytest.approx(0.5)

    def test_sin_conflicto(self, m1):
        assert dempster_normalize(m1) is m1

    def test_conflicto_total(self, abc):
        with pytest.raises(TotalConflictError):
            dempster_normalize(categorical(abc, "{}"))


class TestPropiedadesAleatorias:
    @pytest.fixture
    def masas(self, masa_factory):
        rng = np.random.default_rng(77)
        return [masa_factory(rng, Frame.of_size(n)) for n in (2, 3, 4, 5) for _ in range(30)]

    def test_bel_menor_o_igual_que_pl(self, masas):
        for m in masas:
            for bits in range(m.frame.n_subsets):
                assert belief(m, bits) <= plausibility(m, bits) + 1e-12

    def test_pl_desde_bel_del_complementario(self, masas):
        for m in masas:
            omega = m.frame.omega
            for bits in range(m.frame.n_subsets):
                esperado = 1.0 - conflict(m) - belief(m, omega & ~bits)
                assert plausibility(m, bits) == pytest.approx(esperado, abs=1e-9)

    def test_betp_suma_uno_e_invariante_a_la_normalizacion(self, masas):
        for m in masas:
            betp = pignistic(m)
            assert sum(betp.values()) == pytest.approx(1.0, abs=1e-9)
            assert min(betp.values()) >= 0.0
            assert pignistic(dempster_normalize(m)) == pytest.approx(betp, abs=1e-9)

    @pytest.mark.parametrize("alfa", np.linspace(0.0, 1.0, 11).tolist())
    def test_descuento_valido(self, masas, alfa):
        for m in masas:
            descontada = discount(m, alfa)
            omega = m.frame.omega
            assert sum(descontada.masses.values()) == pytest.approx(1.0, abs=1e-9)
            assert min(descontada.masses.values()) >= 0.0
            assert descontada[omega] == pytest.approx(1.0 - alfa + alfa * m[omega], abs=1e-12)
            for bits, valor in m.masses.items():
                if bits != omega:
                    assert descontada[bits] == pytest.approx(alfa * valor, abs=1e-12)
