import hashlib


def unit_hash(seed, *parts):
    """Deterministic pseudo-uniform float in [0, 1) keyed by integers/tuples."""
    digest = hashlib.blake2b(repr((seed,) + parts).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big") / 2.0**64


def int_hash(seed, *parts):
    digest = hashlib.blake2b(repr((seed,) + parts).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")
