from .pcg32 import Pcg32Streams, splitmix64

__all__ = ["Pcg32Streams", "splitmix64"]
