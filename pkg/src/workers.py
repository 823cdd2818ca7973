import asyncio
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_THREADS = 1


async def _gather_bounded(fn: Callable[[T], R], items: list[T], threads: int) -> list[R]:
    gate = asyncio.Semaphore(threads)

    async def _run(item: T) -> R:
        async with gate:
            return await asyncio.to_thread(fn, item)

    # gather keeps submission order, so results line up with items
    return await asyncio.gather(*[_run(item) for item in items])


def gather_map(
    fn: Callable[[T], R], items: Iterable[T], threads: int = DEFAULT_THREADS
) -> list[R]:
    """Apply ``fn`` to every item, fanning out over at most ``threads`` workers.

    The result order always matches the input order, whatever the thread count.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    return asyncio.run(_gather_bounded(fn, items, threads))
