"""Counting Donaldson-Thomas invariants of quivers with potentials over finite fields."""

from .coefring import Coef
from .ffield import BudgetExceeded, FieldSpec, field
from .fixtures import FixtureSpec, load_fixture, parse_fixture, render_fixture
from .hall import HallElement, hall_product, tilde_A
from .qtorus import QTorusSeries, integrate_I, integrate_Ieq, integrate_Ipsi, twisted_mul
from .quiver import Arrow, Potential, Quiver, euler_form, skew_form, slope, tits_form
from .repenum import Budget, Representation
from .dt import dt_invariant, hn_check, wall_crossing_solve

__all__ = [
    "Arrow", "Budget", "BudgetExceeded", "Coef", "FieldSpec", "FixtureSpec", "HallElement", "Potential",
    "QTorusSeries", "Quiver", "Representation", "dt_invariant", "euler_form", "field", "hall_product",
    "hn_check", "integrate_I", "integrate_Ieq", "integrate_Ipsi", "load_fixture", "parse_fixture",
    "render_fixture", "skew_form", "slope", "tilde_A", "tits_form", "twisted_mul", "wall_crossing_solve",
]
