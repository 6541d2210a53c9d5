"""Tests for the diagonal automorphisms acting on the chain variety."""

from fractions import Fraction

import pytest

from chainr.builders import (
    apply_chain_automorphism,
    build_ech,
    build_rch,
    chain_zone_scales,
    zone_divergence,
)
from chainr.builders.automorphism import carrier_units, xi_zones, zeta_zones
from chainr.exceptions import InvalidInputError
from chainr.tensor import is_cybe_solution


class TestZones:
    """Zone layout."""

    def test_xi_zones_sl5(self):
        first, second = xi_zones(5)
        assert first.positions == frozenset({1, 2, 3, 4})
        assert second.positions == frozenset({1, 2, 5})
        assert first.exponent((1, 5)) == 1
        assert second.exponent((2, 4)) == 1

    def test_zeta_zones_sl5(self):
        first, second = zeta_zones(5)
        assert first.positions == frozenset({2, 3, 4})
        assert first.power == 1
        assert second.positions == frozenset({3})
        assert second.power == -1
        assert second.exponent((4, 3)) == 1

    def test_scales(self):
        assert chain_zone_scales(5, [2, 3], [1, 1]) == [6, 6, 2, 2, 3]

    def test_zero_parameter(self):
        with pytest.raises(InvalidInputError):
            chain_zone_scales(5, [0, 1])

    def test_carrier_units_sl3(self):
        assert carrier_units(3) == [(1, 2), (1, 3), (2, 1), (2, 3)]

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_matches_printed_tables(self, n):
        assert zone_divergence(n) == []


class TestChainAutomorphism:
    """Unit-parameter chains mapped through the variety."""

    def test_rotated_chain(self):
        xi = [Fraction(2, 3), -5]
        assert apply_chain_automorphism(build_rch(5), xi) == build_rch(5, xi)

    def test_enlarged_chain(self):
        xi, zeta = [2, 3], [5, Fraction(-1, 2)]
        image = apply_chain_automorphism(build_ech(5), xi, zeta)
        assert image == build_ech(5, xi, zeta)
        assert is_cybe_solution(image).holds

    def test_identity(self):
        r = build_ech(3)
        assert apply_chain_automorphism(r) == r
