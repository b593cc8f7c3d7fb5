"""Named fixture lattices

A fixture is addressed by a spec string `name[:p1[:p2]]`: `chain:5`, `boolean:3`,
`partition:4`, `fig1_chain:4:2,3`, `m3`, `fig2_bands`.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Tuple, Union
from src.catalog.partitions import merges, partition_id, set_partitions
from src.errors import FixtureParameterError, UnknownFixture
from src.lattice.base import Lattice, build_from_covers
from src.lattice.io import load_lattice

FIG1_PRIMES = (2, 3, 5, 7, 11)
FIG1_DEFAULT = (4, (2, 3))
MAX_BOOLEAN = 10
MAX_PARTITION = 7

Params = Tuple[Union[int, Tuple[int, ...]], ...]

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    params: Params = ()

    def __str__(self):
        parts = [self.name]
        for p in self.params:
            parts.append(",".join(str(q) for q in p) if isinstance(p, tuple) else str(p))
        return ":".join(parts)


def parse_fixture_spec(text: str) -> FixtureSpec:
    name, *raw = text.strip().split(":")
    if name not in FIXTURES:
        raise UnknownFixture(name)
    params = []
    for part in raw:
        try:
            values = tuple(int(v) for v in part.split(",") if v.strip())
        except ValueError:
            raise FixtureParameterError(name, f"'{part}' is not an integer list") from None
        if not values:
            raise FixtureParameterError(name, "empty parameter")
        # The second fig1_chain parameter is a prime list even with a single prime.
        as_list = "," in part or (name == "fig1_chain" and len(params) == 1)
        params.append(values if as_list else values[0])
    return FixtureSpec(name, tuple(params))


def _require(name: str, params: Params, count: int):
    if len(params) != count:
        raise FixtureParameterError(name, f"expects {count} parameter(s), got {len(params)}")


def trivial() -> Lattice:
    return build_from_covers(["T"], [], {"T": "T"}, "trivial")


def chain(n: int) -> Lattice:
    if n < 1:
        raise FixtureParameterError("chain", f"length {n} < 1")
    ids = [str(i) for i in range(n)]
    return build_from_covers(ids, zip(ids, ids[1:]), name=f"chain({n})")


def boolean(n: int) -> Lattice:
    """Subsets of an n-set as bit strings, bit i set when i is in the subset"""
    if not 1 <= n <= MAX_BOOLEAN:
        raise FixtureParameterError("boolean", f"n must lie in [1, {MAX_BOOLEAN}], got {n}")
    ids = ["".join("1" if mask >> i & 1 else "0" for i in range(n)) for mask in range(1 << n)]
    covers = [(ids[mask], ids[mask | 1 << i]) for mask in range(1 << n) for i in range(n) if not mask >> i & 1]
    return build_from_covers(ids, covers, name=f"boolean({n})")


def m3() -> Lattice:
    covers = [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]
    return build_from_covers(["0", "a", "b", "c", "1"], covers, name="m3")


def n5() -> Lattice:
    """0 < a < b < 1 and 0 < c < 1"""
    covers = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    return build_from_covers(["0", "a", "b", "c", "1"], covers, name="n5")


def partition(n: int) -> Lattice:
    """Partitions of {1..n}, finer below coarser"""
    if not 1 <= n <= MAX_PARTITION:
        raise FixtureParameterError("partition", f"n must lie in [1, {MAX_PARTITION}], got {n}")
    parts = sorted(set_partitions(n), key=lambda rgs: (-max(rgs), rgs))
    covers = [(partition_id(rgs), partition_id(up)) for rgs in parts for up in merges(rgs)]
    return build_from_covers([partition_id(rgs) for rgs in parts], covers, name=f"partition({n})")


def fig1_chain(k: int, primes: Tuple[int, ...] = (2, 3)) -> Lattice:
    """Chain varieties: atoms, the nil chain up to N_k and N_omega, and Abelian group chains

    Each prime p contributes the chain Ap_1 < ... < Ap_k (A_p < A_p^2 < ...). A synthetic
    TOP above every maximal element closes the poset into a lattice.
    """
    if not 3 <= k <= 12:
        raise FixtureParameterError("fig1_chain", f"k must lie in [3, 12], got {k}")
    primes = tuple(primes)
    bad = [p for p in primes if p not in FIG1_PRIMES]
    if bad or len(set(primes)) != len(primes):
        raise FixtureParameterError("fig1_chain", f"primes must be distinct members of {FIG1_PRIMES}")
    nil = ["ZM"] + [f"N{i}" for i in range(3, k + 1)] + ["Nomega"]
    groups = [[f"A{p}_{i}" for i in range(1, k + 1)] for p in primes]
    elements = ["T", "SL", "LZ", "RZ"] + nil + ["N3sq", "N3c"] + [a for chain_ in groups for a in chain_] + ["TOP"]
    covers = [("T", a) for a in ("SL", "LZ", "RZ", "ZM")]
    covers += list(zip(nil, nil[1:]))
    covers += [("N3", "N3sq"), ("N3", "N3c")]
    for chain_ in groups:
        covers.append(("T", chain_[0]))
        covers += list(zip(chain_, chain_[1:]))
    tops = ["SL", "LZ", "RZ", "Nomega", "N3sq", "N3c"] + [chain_[-1] for chain_ in groups]
    covers += [(a, "TOP") for a in tops]
    labels = {id_: id_ for id_ in elements}
    name = f"fig1_chain({k},{','.join(str(p) for p in primes)})"
    return build_from_covers(elements, covers, labels, name)


def fig2_bands() -> Lattice:
    return load_lattice(Path(__file__).parent / "fig2_bands.lat")


def _no_params(builder: Callable[[], Lattice]) -> Callable[[str, Params], Lattice]:
    def build(name: str, params: Params) -> Lattice:
        _require(name, params, 0)
        return builder()

    return build


def _one_int(builder: Callable[[int], Lattice]) -> Callable[[str, Params], Lattice]:
    def build(name: str, params: Params) -> Lattice:
        _require(name, params, 1)
        if not isinstance(params[0], int):
            raise FixtureParameterError(name, "expects a single integer")
        return builder(params[0])

    return build


def _fig1(name: str, params: Params) -> Lattice:
    if len(params) > 2:
        raise FixtureParameterError(name, "expects k and a prime list")
    k = params[0] if params else FIG1_DEFAULT[0]
    primes = params[1] if len(params) > 1 else FIG1_DEFAULT[1]
    if isinstance(k, tuple) or isinstance(primes, int):
        raise FixtureParameterError(name, "expects fig1_chain:K:P1,P2,...")
    return fig1_chain(k, primes)


FIXTURES: Dict[str, Callable[[str, Params], Lattice]] = {
    "trivial": _no_params(trivial),
    "chain": _one_int(chain),
    "boolean": _one_int(boolean),
    "m3": _no_params(m3),
    "n5": _no_params(n5),
    "partition": _one_int(partition),
    "fig1_chain": _fig1,
    "fig2_bands": _no_params(fig2_bands),
}


def fixture(spec: Union[str, FixtureSpec]) -> Lattice:
    """Build a fixture from a spec string or FixtureSpec"""
    if isinstance(spec, str):
        spec = parse_fixture_spec(spec)
    if spec.name not in FIXTURES:
        raise UnknownFixture(spec.name)
    lattice = FIXTURES[spec.name](spec.name, spec.params)
    LOGGER.debug(f"Fixture {spec}: {len(lattice)} elements")
    return lattice


def fixture_labels(spec: Union[str, FixtureSpec]) -> Mapping[str, str]:
    """Label name -> element id"""
    lattice = fixture(spec)
    return {label: lattice.id(i) for label, i in lattice.labels.items()}


def fixture_names() -> List[str]:
    return list(FIXTURES)
