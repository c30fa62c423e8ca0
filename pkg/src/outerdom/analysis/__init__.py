"""Partitions, the contraction multigraph, bound audits and approximation reports."""

from outerdom.analysis.audit import AuditReport, BoundCheck, audit_components, lemma22_audit
from outerdom.analysis.hgraph import HGraph, TieBreak, build_h_multigraph, is_valid_h
from outerdom.analysis.partition import PartitionReport, central_selection, partition_wrt, v4plus_mask, vstar_mask
from outerdom.analysis.report import APPROXIMATION_FACTOR, RunReport, approximation_report
from outerdom.analysis.search import LEMMA21_CONSTANT, Counterexample, counterexample_search, lemma21_check

__all__ = [
    "APPROXIMATION_FACTOR",
    "LEMMA21_CONSTANT",
    "AuditReport",
    "BoundCheck",
    "Counterexample",
    "HGraph",
    "PartitionReport",
    "RunReport",
    "TieBreak",
    "approximation_report",
    "audit_components",
    "build_h_multigraph",
    "central_selection",
    "counterexample_search",
    "is_valid_h",
    "lemma21_check",
    "lemma22_audit",
    "partition_wrt",
    "v4plus_mask",
    "vstar_mask",
]
