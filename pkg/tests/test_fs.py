import pytest

from strengthlab.enumeration import EnumCursor
from strengthlab.exceptions import CursorError
from strengthlab.models import CheckpointFile, CursorModel, SearchCheckpoint


@pytest.fixture
def tmp_files(tmp_path):
    base = tmp_path / 'test_root'
    base.mkdir()
    (base / 'test_file.txt').write_text('file content')
    return base


def test_read_file_success(file_system, tmp_files):
    content = file_system.read_file(tmp_files / 'test_file.txt')
    assert content == 'file content'
    assert file_system.reads == [tmp_files / 'test_file.txt']


def test_read_file_failure(file_system, tmp_files, caplog):
    with pytest.raises(FileNotFoundError):
        file_system.read_file(tmp_files / 'missing.txt')
    assert 'Failed to read file' in caplog.text


def test_write_file_replaces_content(file_system, tmp_files):
    target = tmp_files / 'test_file.txt'
    file_system.write_file(target, 'new content')
    assert target.read_text() == 'new content'
    # no temporary file is left behind
    assert sorted(p.name for p in tmp_files.iterdir()) == ['test_file.txt']


def test_write_file_failure(file_system, tmp_files, caplog):
    with pytest.raises(FileNotFoundError):
        file_system.write_file(tmp_files / 'missing_dir' / 'out.txt', 'content')
    assert 'Failed to write to file' in caplog.text


def test_missing_checkpoint_is_empty(file_system, tmp_files):
    checkpoint = file_system.load_checkpoint(tmp_files / 'none.json')
    assert checkpoint.searches == {}


def test_checkpoint_round_trip(file_system, tmp_files):
    cursor = EnumCursor(order=5, path=(1, 2, 5, 3), shard=1, shard_count=4, visited=7)
    checkpoint = CheckpointFile(
        searches={
            'fmax:5:': SearchCheckpoint(
                job='fmax',
                order=5,
                cursors=[CursorModel.from_cursor(cursor)],
                examined=7,
                rounds=1,
                best={'value': 14},
            )
        }
    )
    path = tmp_files / 'checkpoint.json'
    file_system.save_checkpoint(path, checkpoint)

    loaded = file_system.load_checkpoint(path)
    assert loaded == checkpoint
    assert loaded.searches['fmax:5:'].cursors[0].to_cursor() == cursor


def test_checkpoint_version_mismatch(file_system, tmp_files):
    path = tmp_files / 'old.json'
    path.write_text('{"version": 0, "searches": {}}')
    with pytest.raises(CursorError, match='version 0'):
        file_system.load_checkpoint(path)


def test_cursor_model_validates():
    model = CursorModel(order=5, path=[1], visited=1)
    with pytest.raises(CursorError):
        model.to_cursor()
