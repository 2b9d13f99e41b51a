"""Pytest configuration and fixtures."""

import json

import pytest

from acm_toolkit.interchange import save, save_file

from . import corpus


@pytest.fixture
def r1():
    """GSN reference structure R1."""
    return corpus.gsn_r1()


@pytest.fixture
def r2():
    """CAE reference structure R2."""
    return corpus.cae_r2()


@pytest.fixture
def etcs():
    """Integrated ETCS assurance case."""
    return corpus.etcs()


@pytest.fixture
def pattern():
    """Abstract GSN pattern module P."""
    return corpus.gsn_pattern()


@pytest.fixture
def write_doc(tmp_path):
    """Save a document under tmp_path and return the path as a string."""

    def _write(doc, name="model.acm.json"):
        path = tmp_path / name
        save_file(doc, path)
        return str(path)

    return _write


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON value under tmp_path and return the path as a string."""

    def _write(data, name="data.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def envelope():
    """Envelope JSON text of a document, as the MCP tools receive it."""

    def _text(doc):
        return save(doc).decode("utf-8")

    return _text
