"""
Pytest configuration file, setup global pytest fixtures and functions here.
"""
import pytest

from graphbench_core.config import load_config

from .builders import complete_bipartite, complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture(scope='session')
def config():
    return load_config(environ={})


@pytest.fixture(scope='session')
def named_graphs():
    return {
        'K2': complete_graph(2),
        'K3': complete_graph(3),
        'K4': complete_graph(4),
        'P4': path_graph(4),
        'C4': cycle_graph(4),
        'C5': cycle_graph(5),
        'star3': star_graph(3),
        'K33': complete_bipartite(3, 3),
    }
