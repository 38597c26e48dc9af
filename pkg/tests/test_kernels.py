import os
import random
import subprocess
import sys

import pytest

from raagdecomp import BudgetExceededError, backend_name
from raagdecomp import kernels, _pykernel

compiled = kernels._kernel
needs_compiled = pytest.mark.skipif(compiled is None,
                                    reason="compiled kernel not built")


def random_case(rng, n_gens, length):
    masks = [0] * n_gens
    for i in range(n_gens):
        for j in range(i + 1, n_gens):
            if rng.random() < 0.4:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    word = bytes(rng.randrange(2 * n_gens) for _ in range(length))
    return word, tuple(masks)


class TestPureKernel:
    def test_empty(self):
        assert _pykernel.canonicalize(b"", ()) == b""

    def test_cancellation_through_commuting_block(self):
        # generators 0,1 commute; 0,2 do not
        masks = (0b010, 0b101, 0b010)
        # word: g2 g0 g2^-1 -> blocked, stays length 3
        assert len(_pykernel.canonicalize(bytes((4, 0, 5)), masks)) == 3
        # word: g1 g0 g1^-1 -> g1 commutes past g0 and cancels
        assert _pykernel.canonicalize(bytes((2, 0, 3)), masks) == bytes((0,))

    def test_least_letter_first(self):
        masks = (0b10, 0b01)  # two commuting generators
        assert _pykernel.canonicalize(bytes((2, 0)), masks) == bytes((0, 2))

    def test_closure_canonical_matches(self):
        rng = random.Random(11)
        for _ in range(150):
            word, masks = random_case(rng, rng.randrange(1, 5),
                                      rng.randrange(0, 7))
            expect = _pykernel.canonicalize(word, masks)
            assert _pykernel.closure_canonical(word, masks, 100_000) == expect

    def test_closure_equal_detects_equality(self):
        masks = (0b10, 0b01)
        assert _pykernel.closure_equal(bytes((0, 2)), bytes((2, 0)), masks, 100)
        assert not _pykernel.closure_equal(bytes((0,)), bytes((2,)), masks, 100)

    def test_budget_raises(self):
        masks = (0b110, 0b101, 0b011)
        with pytest.raises(BudgetExceededError) as info:
            _pykernel.closure_canonical(bytes((0, 2, 4, 0, 2, 4)), masks, 3)
        assert info.value.dimension == "max_states"


@needs_compiled
class TestCompiledParity:
    def test_canonicalize_matches_pure(self):
        rng = random.Random(23)
        for _ in range(500):
            word, masks = random_case(rng, rng.randrange(1, 8),
                                      rng.randrange(0, 40))
            assert compiled.canonicalize(word, masks) == \
                _pykernel.canonicalize(word, masks)

    def test_closure_canonical_matches_pure(self):
        rng = random.Random(29)
        for _ in range(60):
            word, masks = random_case(rng, rng.randrange(1, 5),
                                      rng.randrange(0, 7))
            assert compiled.closure_canonical(word, masks, 100_000) == \
                _pykernel.closure_canonical(word, masks, 100_000)

    def test_closure_equal_matches_pure(self):
        rng = random.Random(31)
        for _ in range(120):
            w1, masks = random_case(rng, 3, rng.randrange(0, 6))
            w2 = bytes(rng.randrange(6) for _ in range(rng.randrange(0, 6)))
            assert compiled.closure_equal(w1, w2, masks, 100_000) == \
                _pykernel.closure_equal(w1, w2, masks, 100_000)

    def test_budget_raises_same_dimension(self):
        masks = (0b110, 0b101, 0b011)
        with pytest.raises(BudgetExceededError) as info:
            compiled.closure_canonical(bytes((0, 2, 4, 0, 2, 4)), masks, 3)
        assert info.value.dimension == "max_states"

    def test_accepts_bytearray(self):
        masks = (0b10, 0b01)
        assert compiled.canonicalize(bytearray((2, 0)), masks) == bytes((0, 2))


class TestDispatch:
    def test_backend_reported(self):
        assert backend_name() in ("pure", "compiled")

    def test_wide_graphs_fall_back_to_pure(self):
        masks = tuple([0] * 64)
        assert kernels._pick(masks) is _pykernel

    def test_force_pure_env(self):
        out = subprocess.run(
            [sys.executable, "-c",
             "import raagdecomp; print(raagdecomp.backend_name())"],
            capture_output=True, text=True,
            env={**os.environ, "RAAGDECOMP_PURE_PYTHON": "1"})
        assert out.stdout.strip() == "pure"
