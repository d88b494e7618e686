import pytest

from disthom import (MultiMagma, augment_with_trivial, boolean_algebra,
                     chain_lattice, product_lattice)


@pytest.fixture(scope="session")
def b1():
    return boolean_algebra(1)


@pytest.fixture(scope="session")
def b2():
    return boolean_algebra(2)


@pytest.fixture(scope="session")
def l3():
    return chain_lattice(3)


@pytest.fixture(scope="session")
def l3xl3():
    return product_lattice(chain_lattice(3), chain_lattice(3))


@pytest.fixture(scope="session")
def dihedral3():
    """The three-element commutative spindle x * y = 2y - x mod 3."""
    t = [[(2 * y - x) % 3 for y in range(3)] for x in range(3)]
    return MultiMagma([t])


@pytest.fixture(scope="session")
def published_pair_2():
    """Second 4-element two-operation structure from the reference tables."""
    return MultiMagma([
        [[0, 1, 0, 1], [0, 1, 0, 1], [2, 3, 2, 3], [2, 3, 2, 3]],
        [[0, 0, 2, 2], [1, 1, 3, 3], [0, 0, 2, 2], [1, 1, 3, 3]],
    ])


@pytest.fixture(scope="session")
def small_multishelf_pool():
    """A deterministic pool of verified small multishelves for properties."""
    pool = []
    pool.append(boolean_algebra(1))
    pool.append(chain_lattice(3))
    pool.append(boolean_algebra(2))
    one_op = MultiMagma([[[0, 1, 1], [1, 1, 1], [1, 1, 2]]])  # semilattice
    pool.append(augment_with_trivial(one_op, add_left=True, add_right=True))
    t = [[(2 * y - x) % 3 for y in range(3)] for x in range(3)]
    pool.append(augment_with_trivial(MultiMagma([t]), add_left=True))
    return pool
