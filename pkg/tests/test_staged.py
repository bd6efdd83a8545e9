"""
Tests for the staged Hall-matching embedder.
"""

from fractions import Fraction

import pytest

from spanhyper.core import Hypergraph, complete
from spanhyper.embedder import HostPartition, embed_universal, host_partition, partition_pattern
from spanhyper.errors import EmbeddingInvariantError, PartitionError, PreconditionError
from spanhyper.generators import gnp, hamilton_cycle, perfect_matching, sample_bounded_degree
from spanhyper.search import validate_embedding


def _partitions(
    host: Hypergraph, f: Hypergraph, delta: int, epsilon: Fraction, t: int, class_size=None
):
    ep = partition_pattern(f, delta, epsilon, t_override=t)
    hp = host_partition(host.n, ep.t, ep.epsilon, class_size=class_size)
    return hp, ep


class TestEmbedUniversal:
    """Small instances on complete and empty hosts."""

    def setup_method(self):
        self.f = hamilton_cycle(24, 3, 1)
        self.host = complete(24, 3)
        self.hp, self.ep = _partitions(self.host, self.f, 2, Fraction(1, 12), 4)

    def test_complete_host(self):
        trace = embed_universal(self.host, self.f, self.hp, self.ep, seed=1)
        assert trace.success
        assert trace.failure is None
        assert validate_embedding(self.host, self.f, trace.embedding)
        assert [s.stage for s in trace.stages] == list(range(self.ep.t + 1))

    def test_without_lookahead(self):
        trace = embed_universal(self.host, self.f, self.hp, self.ep, seed=1, lookahead=False)
        assert trace.success

    def test_explicit_class_sizes(self):
        hp = host_partition(24, self.ep.t, self.ep.epsilon, class_size=0)
        trace = embed_universal(self.host, self.f, hp, self.ep)
        assert trace.success

    def test_empty_host_fails_in_placement(self):
        empty = Hypergraph(3, 24, ())
        trace = embed_universal(empty, self.f, self.hp, self.ep, attempts=2)
        assert not trace.success
        assert trace.failure == "placement"
        assert trace.failed_stage == 0
        assert trace.attempt == 1
        assert trace.stages[0].witness["complete"] is False

    def test_trace_to_dict(self):
        data = embed_universal(self.host, self.f, self.hp, self.ep).to_dict()
        assert data["success"] is True
        assert len(data["embedding"]) == 24
        assert data["stages"][0]["stage"] == 0

    def test_deterministic(self):
        a = embed_universal(self.host, self.f, self.hp, self.ep, seed=9)
        b = embed_universal(self.host, self.f, self.hp, self.ep, seed=9)
        assert a.to_dict() == b.to_dict()

    def test_order_mismatch(self):
        with pytest.raises(PreconditionError):
            embed_universal(complete(25, 3), self.f, self.hp, self.ep)

    def test_partition_t_mismatch(self):
        hp = host_partition(24, self.ep.t + 1, self.ep.epsilon)
        with pytest.raises(PreconditionError):
            embed_universal(self.host, self.f, hp, self.ep)

    def test_attempts_must_be_positive(self):
        with pytest.raises(PreconditionError):
            embed_universal(self.host, self.f, self.hp, self.ep, attempts=0)


class TestStageClasses:
    """Non-empty host classes V_1..V_t and the slack check."""

    def test_matching_with_small_classes(self):
        # X = (4, 6, 6, 6, 2); classes of two keep every stage feasible
        f = perfect_matching(24, 3)
        host = complete(24, 3)
        ep = partition_pattern(f, 1, Fraction(1, 12), t_override=4)
        assert [len(c) for c in ep.classes] == [4, 6, 6, 6, 2]
        hp = host_partition(24, ep.t, ep.epsilon, class_size=2)
        assert [len(c) for c in hp.classes] == [16, 2, 2, 2, 2]

        trace = embed_universal(host, f, hp, ep, seed=3)
        assert trace.success
        assert validate_embedding(host, f, trace.embedding)
        for i in range(1, ep.t + 1):
            upto = hp.upto(i)
            assert all(trace.embedding.mapping[x] in upto for x in ep.classes[i])
            assert trace.stages[i].available <= len(upto)

    def test_single_vertex_classes(self):
        f = perfect_matching(24, 3)
        ep = partition_pattern(f, 1, Fraction(1, 12), t_override=4)
        hp = host_partition(24, ep.t, ep.epsilon, class_size=1, seed=5)
        trace = embed_universal(complete(24, 3), f, hp, ep, seed=1)
        assert trace.success

    def test_conformant_partition_keeps_slack(self):
        # eps n / (10 t) = 30 / 30 exactly, so V_1..V_3 hold one vertex each
        f = perfect_matching(60, 2)
        host = complete(60, 2)
        ep = partition_pattern(f, 1, Fraction(1, 2), t_override=3)
        hp = host_partition(60, ep.t, ep.epsilon)
        assert hp.conformant
        assert [len(c) for c in hp.classes] == [57, 1, 1, 1]

        trace = embed_universal(host, f, hp, ep, seed=2)
        assert trace.success
        floor_ = Fraction(9, 10) * ep.epsilon * f.n
        for record in trace.stages[1 : ep.t]:
            assert record.available - record.size >= floor_

    def test_slack_violation_raises(self):
        f = perfect_matching(60, 2)
        ep = partition_pattern(f, 1, Fraction(1, 2), t_override=3)
        # oversized classes flagged as conformant leave stage 1 with 12 free vertices
        classes = (
            frozenset(range(1, 34)),
            frozenset(range(34, 43)),
            frozenset(range(43, 52)),
            frozenset(range(52, 61)),
        )
        hp = HostPartition(classes, 3, Fraction(1, 2), 60, conformant=True)
        with pytest.raises(EmbeddingInvariantError):
            embed_universal(complete(60, 2), f, hp, ep, seed=2)


@pytest.mark.slow
class TestEmbeddingAcceptance:
    @pytest.mark.parametrize("class_size", [None, 1])
    def test_desk_scale_run(self, class_size):
        host = gnp(60, 3, 0.7, 42)
        patterns = [sample_bounded_degree(60, 3, 2, seed) for seed in range(1, 26)]
        patterns.append(hamilton_cycle(60, 3, 1))

        failures = []
        for index, f in enumerate(patterns):
            try:
                hp, ep = _partitions(host, f, 2, Fraction(1, 30), 8, class_size)
            except PartitionError:
                failures.append((index, "partition"))
                continue
            trace = embed_universal(host, f, hp, ep, seed=7)
            if not trace.success:
                failures.append((index, trace.failure))
                continue
            assert validate_embedding(host, f, trace.embedding)
            for i in range(1, ep.t + 1):
                assert all(trace.embedding.mapping[x] in hp.upto(i) for x in ep.classes[i])
        assert len(failures) <= 2, failures
