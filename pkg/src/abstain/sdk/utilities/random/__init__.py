from ._rng import RNGenerator, draw_random_integers, init_rng

__all__ = ["RNGenerator", "draw_random_integers", "init_rng"]
