import pytest

from outerdom.exceptions import InputError
from outerdom.graphs.core import Graph
from outerdom.oracles import get_oracle, get_oracle_class
from outerdom.oracles.auto import AutoOracle
from outerdom.oracles.bruteforce import BruteForceOracle
from outerdom.oracles.domination import MdsMethod
from outerdom.oracles.treewidth import TreewidthOracle


@pytest.mark.parametrize(("spec", "cls"), [("auto", AutoOracle), ("bf", BruteForceOracle), ("dp", TreewidthOracle)])
def test_short_names(spec, cls):
    assert get_oracle_class(spec) is cls


def test_import_path():
    assert get_oracle_class("outerdom.oracles.bruteforce.BruteForceOracle") is BruteForceOracle


def test_unknown_oracle():
    with pytest.raises(InputError, match="Unknown oracle"):
        get_oracle("nope")


def test_auto_picks_method_by_outerplanarity(g10):
    assert get_oracle().solve(g10).method == MdsMethod.TREEWIDTH_DP
    result = get_oracle("auto").solve(Graph.complete(4))
    assert result.method == MdsMethod.BRUTEFORCE
    assert result.size == 1
