"""Data models for PFAvoid."""
from .dyck_path import DyckPath, RunComposition
from .parking_function import ParkingFunction, PreferenceVector
from .permutation import Permutation, PatternSet
from .tree import RootedOrderedTree, NonCrossingTree
from .sequence import SequenceRecord, ComparisonReport, TableGroup
from .output_row import OutputRow, BijectionReport, TableLine

__all__ = [
    'DyckPath', 'RunComposition', 'ParkingFunction', 'PreferenceVector',
    'Permutation', 'PatternSet', 'RootedOrderedTree', 'NonCrossingTree',
    'SequenceRecord', 'ComparisonReport', 'TableGroup', 'OutputRow', 'BijectionReport', 'TableLine',
]
