"""Experiment drivers, corpus enumeration, reports and the command-line interface."""

from .corpus import all_graphs, corpus_connected_graphs, random_graphs
from .processes import hitting_times, process_hitting_time, random_regular_experiment, random_regular_graph
from .report import ExperimentReport, rat
from .searches import full_copy_audit, q1_record, q2_record, search_question_1prime, sweep_question_2

__all__ = [
    "ExperimentReport", "all_graphs", "corpus_connected_graphs", "full_copy_audit", "hitting_times",
    "process_hitting_time", "q1_record", "q2_record", "random_graphs", "random_regular_experiment",
    "random_regular_graph", "rat", "search_question_1prime", "sweep_question_2",
]
