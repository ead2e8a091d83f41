"""Deterministic bit generation from digit comparisons of prime roots.

Primes are paired across two consecutive-prime sets. Each round rotates
the second set and compares, digit by digit, a window of the fractional
expansions of the two roots of that round's degree. A greater digit on
the left emits 1, a smaller one emits 0, ties emit nothing. Bits from
all comparisons, in schedule order, form one reproducible stream per
configuration.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice

import numpy as np

from . import primes as _primes
from .roots import DigitBlock, root_fractional_digits

__all__ = [
    "ConfigError",
    "StreamExhausted",
    "GeneratorConfig",
    "ScheduleEntry",
    "StreamCache",
    "schedule",
    "compare_digits",
    "operator_O",
    "concat",
    "generate_bits",
    "pair_stream",
    "bits_to_decimal",
    "digits_stream",
]


class ConfigError(ValueError):
    """A generator configuration violates one of its invariants."""


class StreamExhausted(RuntimeError):
    """More output was requested than a fixed override schedule can supply."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime_tuple(name: str, values) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if not _is_prime(v):
            raise ConfigError(f"{name} must contain only primes, got {v}")
    if len(set(out)) != len(out):
        raise ConfigError(f"{name} must not repeat primes")
    return out


@dataclass(frozen=True)
class GeneratorConfig:
    """Frozen description of one bit stream.

    The default values are the desk-scale working point: 200 prime pairs,
    4 rounds, a 20000-digit expansion per root with the first 50 digits
    skipped. c1, c2 and degrees override the canonical prime tables for
    experiments with hand-picked primes; such configs stop at their single
    block instead of advancing to fresh primes.
    """

    n_pairs: int = 200
    rounds: int = 4
    precision_digits: int = 20_000
    skip_digits: int = 50
    block_index: int = 0
    c1: tuple[int, ...] | None = None
    c2: tuple[int, ...] | None = None
    degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        for name in ("n_pairs", "rounds", "precision_digits", "skip_digits", "block_index"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(f"{name} must be an int")
        if self.n_pairs < 1:
            raise ConfigError("n_pairs must be at least 1")
        if self.rounds < 1:
            raise ConfigError("rounds must be at least 1")
        if self.rounds > self.n_pairs:
            raise ConfigError("rounds must not exceed n_pairs")
        if not 40 <= self.skip_digits <= 100:
            raise ConfigError("skip_digits must lie in 40..100")
        if self.precision_digits <= self.skip_digits:
            raise ConfigError("precision_digits must exceed skip_digits")
        if self.block_index < 0:
            raise ConfigError("block_index must be nonnegative")
        if (self.c1 is None) != (self.c2 is None):
            raise ConfigError("c1 and c2 must be given together")
        if self.c1 is not None:
            c1 = _check_prime_tuple("c1", self.c1)
            c2 = _check_prime_tuple("c2", self.c2)
            if len(c1) != self.n_pairs or len(c2) != self.n_pairs:
                raise ConfigError("c1 and c2 must each hold n_pairs primes")
            if set(c1) & set(c2):
                raise ConfigError("c1 and c2 must be disjoint")
            object.__setattr__(self, "c1", c1)
            object.__setattr__(self, "c2", c2)
        if self.degrees is not None:
            degrees = _check_prime_tuple("degrees", self.degrees)
            if len(degrees) != self.rounds:
                raise ConfigError("degrees must hold one prime per round")
            object.__setattr__(self, "degrees", degrees)

    @property
    def window(self) -> int:
        """Digits compared per pair: positions skip+1 .. precision."""
        return self.precision_digits - self.skip_digits


@dataclass(frozen=True)
class ScheduleEntry:
    """One root-pair comparison: round j, pair slot i, and the primes involved."""

    round_index: int
    pair_index: int
    root_degree: int
    left: int
    right: int


def _round_degree(config: GeneratorConfig, j: int) -> int:
    if config.degrees is not None:
        return config.degrees[j - 1]
    return _primes.nth_prime(j)


def _block_entries(config: GeneratorConfig, block: int):
    if config.c1 is not None:
        c1, c2 = config.c1, config.c2
    else:
        sets = _primes.prime_pair_sets(config.n_pairs, block)
        c1, c2 = sets.c1, sets.c2
    n = config.n_pairs
    for j in range(1, config.rounds + 1):
        degree = _round_degree(config, j)
        for i in range(1, n + 1):
            # Round j pairs slot i with the element j places back in c2,
            # cyclically; j < n makes this a derangement of the pairing.
            yield ScheduleEntry(j, i, degree, c1[i - 1], c2[(i - 1 - j) % n])


def _iter_schedule(config: GeneratorConfig):
    block = config.block_index
    while True:
        yield from _block_entries(config, block)
        if config.c1 is not None:
            return
        block += 1


def schedule(config: GeneratorConfig) -> list[ScheduleEntry]:
    """The comparison schedule of the config's own block, in (round, pair) order."""
    return list(_block_entries(config, config.block_index))


def compare_digits(a: int, b: int) -> int | None:
    """1 if a > b, 0 if a < b, None when the digits tie."""
    for name, v in (("a", a), ("b", b)):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v <= 9:
            raise ValueError(f"{name} must be a digit in 0..9")
    if a == b:
        return None
    return 1 if a > b else 0


def _digit_pair(value) -> np.ndarray:
    arr = value.digits if isinstance(value, DigitBlock) else np.asarray(value, dtype=np.uint8)
    if arr.ndim != 1:
        raise ValueError("digit windows must be one dimensional")
    if arr.size and arr.max() > 9:
        raise ValueError("digits must lie in 0..9")
    return arr


def operator_O(left, right) -> np.ndarray:
    """Positionwise digit comparison of two aligned windows.

    Emits one bit per non-tied position, in order. Accepts DigitBlocks
    (offsets must agree) or plain digit arrays.
    """
    if isinstance(left, DigitBlock) and isinstance(right, DigitBlock):
        if left.offset != right.offset:
            raise ValueError("digit windows must start at the same offset")
    a = _digit_pair(left)
    b = _digit_pair(right)
    if a.size != b.size:
        raise ValueError("digit windows must have equal length")
    ne = a != b
    return (a[ne] > b[ne]).astype(np.uint8)


def concat(chunks) -> np.ndarray:
    """Concatenate bit sequences into one uint8 bit array."""
    parts = [np.asarray(c, dtype=np.uint8).ravel() for c in chunks]
    if not parts:
        return np.zeros(0, dtype=np.uint8)
    out = np.concatenate(parts)
    if out.size and out.max() > 1:
        raise ValueError("bit sequences may only contain 0 and 1")
    return out


def _entry_bits(task) -> np.ndarray:
    left, right, degree, first, count = task
    a = root_fractional_digits(left, degree, first, count)
    b = root_fractional_digits(right, degree, first, count)
    ne = a != b
    return (a[ne] > b[ne]).astype(np.uint8)


def _entry_bits_packed(task):
    # Worker-side variant: packed bytes cross the process boundary 8x smaller.
    bits = _entry_bits(task)
    return np.packbits(bits).tobytes(), int(bits.size)


class StreamCache:
    """Materialized prefix of one configuration's bit stream.

    Grows on demand and never mutates written bits, so any two requests
    see consistent prefixes. generate_bits keeps one shared instance per
    config; independent instances recompute from scratch, which is what
    determinism checks want.
    """

    def __init__(self, config: GeneratorConfig):
        self.config = config
        self._entries = _iter_schedule(config)
        self._chunks: list[np.ndarray] = []
        self._buf = np.zeros(0, dtype=np.uint8)
        self._total = 0
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return self._total

    def _task(self, entry: ScheduleEntry):
        cfg = self.config
        return (entry.left, entry.right, entry.root_degree, cfg.skip_digits + 1, cfg.window)

    def prefix(self, n_bits: int, workers: int = 1) -> np.ndarray:
        """The first n_bits of the stream as a read-only uint8 view."""
        if not isinstance(n_bits, int) or isinstance(n_bits, bool) or n_bits < 0:
            raise ValueError("n_bits must be a nonnegative int")
        if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
            raise ValueError("workers must be a positive int")
        with self._lock:
            while self._total < n_bits:
                self._extend(n_bits - self._total, workers)
            if self._chunks:
                self._buf = np.concatenate([self._buf] + self._chunks)
                self._buf.setflags(write=False)
                self._chunks.clear()
            return self._buf[:n_bits]

    def _extend(self, deficit: int, workers: int):
        # Ties run near 10 percent, so 0.88 bits per compared digit
        # slightly overshoots and one wave usually suffices.
        est = math.ceil(deficit / (0.88 * self.config.window))
        batch = list(islice(self._entries, max(1, min(1024, est))))
        if not batch:
            raise StreamExhausted(
                f"override schedule exhausted after {self._total} bits; "
                "configs with explicit c1/c2 do not advance to new blocks"
            )
        tasks = [self._task(e) for e in batch]
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
                chunk = max(1, len(tasks) // (workers * 4))
                for blob, nbits in pool.map(_entry_bits_packed, tasks, chunksize=chunk):
                    bits = np.unpackbits(np.frombuffer(blob, dtype=np.uint8), count=nbits)
                    self._chunks.append(bits)
                    self._total += nbits
        else:
            for task in tasks:
                bits = _entry_bits(task)
                self._chunks.append(bits)
                self._total += bits.size


_shared: dict[GeneratorConfig, StreamCache] = {}
_shared_lock = threading.Lock()


def shared_stream(config: GeneratorConfig) -> StreamCache:
    """The process-wide cache for config; all library consumers reuse it."""
    with _shared_lock:
        cache = _shared.get(config)
        if cache is None:
            cache = _shared[config] = StreamCache(config)
        return cache


def generate_bits(config: GeneratorConfig, max_bits: int, workers: int = 1) -> np.ndarray:
    """First max_bits bits of the stream defined by config.

    Deterministic in (config, max_bits): reruns and longer runs agree on
    their common prefix. max_bits must be positive.
    """
    if not isinstance(max_bits, int) or isinstance(max_bits, bool) or max_bits < 1:
        raise ValueError("max_bits must be a positive int")
    return shared_stream(config).prefix(max_bits, workers)


def pair_stream(config: GeneratorConfig, max_pairs: int) -> np.ndarray:
    """First max_pairs compared digit pairs as an (n, 2) uint8 array.

    Tied pairs are included; they occupy a schedule position even though
    they emit no bit.
    """
    if not isinstance(max_pairs, int) or isinstance(max_pairs, bool) or max_pairs < 0:
        raise ValueError("max_pairs must be a nonnegative int")
    if max_pairs == 0:
        return np.zeros((0, 2), dtype=np.uint8)
    first = config.skip_digits + 1
    count = config.window
    parts = []
    total = 0
    for entry in _iter_schedule(config):
        a = root_fractional_digits(entry.left, entry.root_degree, first, count)
        b = root_fractional_digits(entry.right, entry.root_degree, first, count)
        parts.append(np.stack([a, b], axis=1))
        total += count
        if total >= max_pairs:
            return np.concatenate(parts)[:max_pairs]
    raise StreamExhausted(
        f"override schedule supplies only {total} digit pairs, {max_pairs} requested"
    )


_NIBBLE_WEIGHTS = np.array([8, 4, 2, 1], dtype=np.int64)


def bits_to_decimal(bits) -> np.ndarray:
    """Map a bit array to decimal digits via non-overlapping 4-bit groups.

    Groups are read most significant bit first; values 10..15 are
    discarded, as is any trailing group shorter than 4 bits.
    """
    arr = np.asarray(bits, dtype=np.uint8).ravel()
    if arr.size and arr.max() > 1:
        raise ValueError("bits may only contain 0 and 1")
    groups = arr.size // 4
    if groups == 0:
        return np.zeros(0, dtype=np.uint8)
    values = arr[: groups * 4].reshape(groups, 4) @ _NIBBLE_WEIGHTS
    return values[values <= 9].astype(np.uint8)


def digits_stream(config: GeneratorConfig, count: int, workers: int = 1):
    """First count decimal digits of the stream, with the bits consumed.

    Returns (digits, bits_consumed) where bits_consumed is the smallest
    multiple of 4 whose decoding yields count digits.
    """
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise ValueError("count must be a positive int")
    cache = shared_stream(config)
    # 10 of 16 nibble values survive, so one digit costs 6.4 bits on average.
    est = max(64, math.ceil(count * 6.4) + 64)
    while True:
        est -= est % 4
        bits = cache.prefix(est, workers)
        groups = bits.size // 4
        values = bits[: groups * 4].reshape(groups, 4) @ _NIBBLE_WEIGHTS
        keep = values <= 9
        kept = np.cumsum(keep)
        if kept.size and kept[-1] >= count:
            last_group = int(np.searchsorted(kept, count))
            digits = values[keep][:count].astype(np.uint8)
            return digits, 4 * (last_group + 1)
        est = math.ceil(est * 1.8)
