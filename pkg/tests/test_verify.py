import pytest

from plueckerfan import verify
from plueckerfan.chain_order import ChainOrderPartition, interpolating_hrep
from plueckerfan.order_core import (
    CapacityError,
    DistributiveLattice,
    LatticeError,
    Poset,
    PosetError,
)


def test_suite_registry_is_complete():
    assert sorted(verify.SUITES) == [
        "asl", "convex", "counts", "ehrhart", "genhibi-cone", "hibi-cone",
        "minkowski", "pbw-cone", "pbwstrlaws", "ssyt-cone", "strlaws", "tau"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_report_fields_round_trip():
    report = verify.run_suite("counts", n=4, seed=0)
    obj = report.to_json_obj()
    assert obj["suite"] == "counts" and obj["failures"] == []
    assert obj["checks"] == report.checks


def test_ehrhart_capacity_guard():
    with pytest.raises(CapacityError):
        verify.run_suite("ehrhart", n=9)


def test_random_posets_are_deterministic():
    import random
    a = [p.to_json() for p in
         (verify.random_poset(random.Random(42)) for _ in range(5))]
    b = [p.to_json() for p in
         (verify.random_poset(random.Random(42)) for _ in range(5))]
    assert a == b


def test_partition_sampling_counts():
    import random
    poset = verify.random_poset(random.Random(3), max_size=4)
    parts = verify.partitions_of(poset, 0)
    assert len(parts) == 2 ** len(poset)


def test_partition_mismatch_rejected():
    p1 = Poset.from_covers(["a"], [])
    p2 = Poset.from_covers(["a", "b"], [])
    part = ChainOrderPartition.order_polytope(p2)
    with pytest.raises(PosetError):
        interpolating_hrep(p1, part)


def test_sampler_logs_rejections():
    from plueckerfan import cones
    from plueckerfan.plucker_lattices import semistandard_lattice
    lat = semistandard_lattice(3)
    hrep = cones.cone_hrep("HIBI", lattice=lat)
    pts, rejected = verify.sample_cone_points(
        hrep, cones.interior_witness(lat), 40, seed=0, scale=2, spread=6)
    assert len(pts) == 40 and rejected > 0
    assert all(cones.contains(hrep, w) for w in pts)


def test_large_lattice_uses_sampled_axioms():
    # chains are distributive; above the full-check limit the sampled path runs
    names = [f"c{i:02d}" for i in range(70)]
    poset = Poset.from_covers(names, list(zip(names, names[1:])))
    lat = DistributiveLattice.from_poset(poset)
    assert len(lat) == 70


def test_nondistributive_lattice_rejected():
    # three incomparable atoms under a common top: modular but not distributive
    poset = Poset.from_covers(
        ["bot", "x", "y", "z", "top"],
        [("bot", "x"), ("bot", "y"), ("bot", "z"),
         ("x", "top"), ("y", "top"), ("z", "top")])
    with pytest.raises(LatticeError):
        DistributiveLattice.from_poset(poset)


def test_non_lattice_rejected():
    poset = Poset.from_covers(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    with pytest.raises(LatticeError):
        DistributiveLattice.from_poset(poset)
