import pytest

from trustpath import fixture_topology, serialize_topology


@pytest.fixture()
def demo_topology():
    return fixture_topology()


@pytest.fixture()
def demo_file(tmp_path):
    path = tmp_path / "demo.trust"
    path.write_text(serialize_topology(fixture_topology()), encoding="utf-8")
    return str(path)
