"""Contiguous flock windows over an ordered gallery."""

from dataclasses import dataclass

from ..errors import ConfigurationError


@dataclass(frozen=True)
class FlockWindow:
    """`size` consecutive list positions starting at `start`; the target sits at start + target_offset."""

    start: int
    size: int
    target_offset: int = 0

    def __post_init__(self):
        if self.size < 1:
            raise ConfigurationError(f"Flock size must be positive, got {self.size}")
        if self.start < 0:
            raise ConfigurationError(f"Window start must be non-negative, got {self.start}")
        if not 0 <= self.target_offset < self.size:
            raise ConfigurationError(
                f"Target offset {self.target_offset} outside window of size {self.size}"
            )

    @property
    def stop(self) -> int:
        return self.start + self.size

    @property
    def target(self) -> int:
        return self.start + self.target_offset

    def as_slice(self) -> slice:
        return slice(self.start, self.stop)


def check_flock_size(k: int, list_len: int) -> None:
    """Flock sizes must be odd (so a center exists) and fit in the list."""
    if k < 1:
        raise ConfigurationError(f"Flock size must be positive, got {k}")
    if k % 2 == 0:
        raise ConfigurationError(f"Flock size must be odd, got {k}")
    if k > list_len:
        raise ConfigurationError(f"Flock size {k} exceeds list length {list_len}")


def query_windows(list_len: int, target: int, k: int) -> FlockWindow:
    """
    Window of exactly k positions containing `target`.

    Centered on the target when possible, otherwise clamped to the list
    boundaries so the window keeps full size.
    """
    check_flock_size(k, list_len)
    if not 0 <= target < list_len:
        raise ConfigurationError(f"Target {target} outside list of length {list_len}")

    start = min(max(target - k // 2, 0), list_len - k)
    return FlockWindow(start=start, size=k, target_offset=target - start)
