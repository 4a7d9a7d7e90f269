import json

import pytest

from strengthlab.bounds import FMaxJob, f_max
from strengthlab.config import RunConfig
from strengthlab.exceptions import CursorError, SearchInterrupted
from strengthlab.models import CheckpointFile
from strengthlab.parsers import graph6_encode
from strengthlab.ramsey import ArrowingJob
from strengthlab.services import ShardedSearchService


def _stop_on_call(number):
    calls = {'count': 0}

    def stop_requested():
        calls['count'] += 1
        return calls['count'] >= number

    return stop_requested


def test_job_keys():
    assert ArrowingJob(7, 4, 4).key == 'arrows:7:4,4'
    assert FMaxJob(5).key == 'fmax:5:'


def test_results_do_not_depend_on_chunk_size(logger):
    outcomes = []
    for chunk_size in (3, 40, 1000):
        service = ShardedSearchService(shard_count=4, chunk_size=chunk_size, logger=logger)
        outcomes.append(service.run(FMaxJob(5)))
    assert {outcome.examined for outcome in outcomes} == {34}
    assert len({json.dumps(outcome.best, sort_keys=True) for outcome in outcomes}) == 1


def test_pool_gives_same_outcome(logger):
    single = ShardedSearchService(workers=1, shard_count=4, chunk_size=10, logger=logger)
    pooled = ShardedSearchService(workers=3, shard_count=4, chunk_size=10, logger=logger)
    first, second = single.run(FMaxJob(6)), pooled.run(FMaxJob(6))
    assert (first.best, first.examined, first.rounds) == (second.best, second.examined, second.rounds)


def test_completed_search_is_memoized(service):
    first = service.run(FMaxJob(5))
    again = service.run(FMaxJob(5))
    assert again.best == first.best
    assert again.examined == first.examined == 34


def test_interrupted_search_resumes_from_checkpoint(tmp_path, logger):
    path = tmp_path / 'search.json'
    interrupted = ShardedSearchService(
        shard_count=4,
        chunk_size=5,
        checkpoint_path=str(path),
        stop_requested=_stop_on_call(2),
        logger=logger,
    )
    with pytest.raises(SearchInterrupted, match='fmax:6:'):
        f_max(6, service=interrupted)

    saved = CheckpointFile.model_validate_json(path.read_text())
    assert saved.searches['fmax:6:'].rounds == 1
    assert 0 < saved.searches['fmax:6:'].examined <= 20

    resumed = f_max(
        6,
        service=ShardedSearchService(
            shard_count=4, chunk_size=5, checkpoint_path=str(path), logger=logger
        ),
    )
    fresh = f_max(6, service=ShardedSearchService(shard_count=4, chunk_size=5, logger=logger))
    assert (resumed.value, resumed.work) == (fresh.value, fresh.work)
    assert [graph6_encode(graph) for graph in resumed.witness] == [
        graph6_encode(graph) for graph in fresh.witness
    ]


def test_checkpoint_holds_several_searches(tmp_path, logger):
    path = tmp_path / 'search.json'
    service = ShardedSearchService(shard_count=2, checkpoint_path=str(path), logger=logger)
    service.run(FMaxJob(4))
    service.run(ArrowingJob(5, 3, 3))
    saved = CheckpointFile.model_validate_json(path.read_text())
    assert sorted(saved.searches) == ['arrows:5:3,3', 'fmax:4:']


def test_corrupt_checkpoint_is_rejected(tmp_path, logger):
    path = tmp_path / 'search.json'
    path.write_text('{"searches": 3}')
    service = ShardedSearchService(checkpoint_path=str(path), logger=logger)
    with pytest.raises(CursorError, match='Corrupt checkpoint'):
        service.run(FMaxJob(4))


def test_scan_failure_marks_shards_failed(service, progress_tracker, monkeypatch, caplog):
    def broken(task):
        raise RuntimeError('scan exploded')

    monkeypatch.setattr(FMaxJob, 'scan_function', property(lambda self: broken))
    with pytest.raises(RuntimeError):
        service.run(FMaxJob(4))
    states = progress_tracker.get_shard_states('fmax:4:')
    assert states and all(state == 'failed' for _, state in states)
    assert 'Round 1 of fmax:4: failed' in caplog.text


def test_from_config():
    run = RunConfig(workers=2, shard_count=6, checkpoint_every=99, checkpoint_path='x.json')
    service = ShardedSearchService.from_config(run)
    assert (service.workers, service.shard_count, service.chunk_size) == (2, 6, 99)
    assert service.checkpoint_path == 'x.json'


def test_invalid_service_settings():
    with pytest.raises(ValueError):
        ShardedSearchService(workers=0)
