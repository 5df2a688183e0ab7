"""Progress notes and bars on stderr."""

import sys

import tqdm

_QUIET = False


def set_quiet(quiet):
    """Silence (or restore) progress notes and bars."""
    global _QUIET
    _QUIET = bool(quiet)


def note(message, *, end="\n"):
    """Print a progress note to stderr."""
    if not _QUIET:
        print(message, file=sys.stderr, end=end, flush=True)


def bar(iterable, **kwargs):
    """Wrap an iterable in a progress bar unless quiet."""
    return tqdm.tqdm(iterable, disable=_QUIET, leave=False, **kwargs)


def trange(*args, **kwargs):
    """Progress-bar range unless quiet."""
    return tqdm.trange(*args, disable=_QUIET, leave=False, **kwargs)
