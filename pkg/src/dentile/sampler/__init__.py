"""Random domino tilings of Aztec regions by the 2x2 flip chain."""
from .kernel import KERNEL
from .rng import ALGORITHM, SplitMix64, chain_seed
from .render import render_svg
from .tiling import (FrozenStats, PathFamily, Tiling, default_burn_in, domino_type,
                     encode_paths, flip_block, flip_step, frozen_stats, initial_tiling,
                     run_batch, sample, sample_many, thread_count)

__all__ = [
    "ALGORITHM", "KERNEL", "FrozenStats", "PathFamily", "SplitMix64", "Tiling", "chain_seed",
    "default_burn_in", "domino_type", "encode_paths", "flip_block", "flip_step",
    "frozen_stats", "initial_tiling", "render_svg", "run_batch", "sample", "sample_many", "thread_count",
]
