import random

import pytest

from hppkds.keygen import PrivateKey, derive_public, generate_keypair
from hppkds.params import custom_params, standard_params, toy_params
from hppkds.polyring import BaseGrid, FieldPoly

# Worked example: F_13, R = 2**24.
TOY_S1, TOY_R1 = 6797, 4267
TOY_S2, TOY_R2 = 7123, 6475
TOY_F = (4, 9)
TOY_H = (10, 7)
TOY_B_COLUMNS = [(8, 7), (5, 11)]


def make_toy(m=2):
    prm = toy_params(m=m)
    sk = PrivateKey(prm, FieldPoly(13, TOY_F), FieldPoly(13, TOY_H),
                    TOY_R1, TOY_S1, TOY_R2, TOY_S2)
    base = BaseGrid.from_columns(13, TOY_B_COLUMNS[:m])
    return sk, derive_public(sk, base, 1), base


@pytest.fixture
def toy():
    return make_toy()


@pytest.fixture(scope="session")
def level_keys():
    rng = random.Random(2024)
    return {lvl: generate_keypair(standard_params(lvl), rng) for lvl in ("I", "III", "V")}


def random_toy_params(rng, m=2):
    L = rng.randint(12, 16)
    # R > 2**8 * S**2: the Barrett floor is always exact for honest signatures
    return custom_params(13, 1, 1, m, L, L + 24)


# acceptance criteria report: one line per criterion in the terminal summary
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
