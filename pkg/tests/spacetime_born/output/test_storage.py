import os

import pytest

from spacetime_born.output.storage import FileResultSink, MemoryResultSink, create_result_sink


def test_memory_sink_round_trip(memory_sink):
    location = memory_sink.write("sweep_1_2.csv", "P,born\n0,1\n")
    assert location == "sweep_1_2.csv"
    assert memory_sink.read("sweep_1_2.csv") == "P,born\n0,1\n"
    assert memory_sink.read("missing.csv") is None


def test_memory_sink_lists_sorted(memory_sink):
    memory_sink.write("b.json", "{}")
    memory_sink.write("a.csv", "")
    assert memory_sink.list_outputs() == ["a.csv", "b.json"]


def test_file_sink_creates_directory(output_dir):
    assert not os.path.exists(output_dir)
    FileResultSink(output_dir)
    assert os.path.isdir(output_dir)


def test_file_sink_writes_and_reads(file_sink, output_dir):
    path = file_sink.write("fig1.csv", "P,born,dgp,delta_percent\n")
    assert path == os.path.join(output_dir, "fig1.csv")
    assert file_sink.read("fig1.csv") == "P,born,dgp,delta_percent\n"
    assert file_sink.read("fig9.csv") is None


def test_file_sink_keeps_lf_endings(file_sink, output_dir):
    file_sink.write("table.csv", "a\nb\n")
    with open(os.path.join(output_dir, "table.csv"), "rb") as f:
        assert f.read() == b"a\nb\n"


def test_file_sink_lists_only_files(file_sink, output_dir):
    file_sink.write("z.svg", "<svg/>")
    file_sink.write("a.csv", "")
    os.makedirs(os.path.join(output_dir, "nested"))
    assert file_sink.list_outputs() == ["a.csv", "z.svg"]


def test_sink_factory(output_dir):
    assert isinstance(create_result_sink("memory"), MemoryResultSink)
    assert isinstance(create_result_sink("file", output_dir=output_dir), FileResultSink)

    with pytest.raises(ValueError):
        create_result_sink("file")
    with pytest.raises(ValueError):
        create_result_sink("s3", output_dir=output_dir)
