"""Verification pipeline: resolves check ids and runs them concurrently."""

from __future__ import annotations

import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor

from avoid321.components.checks.base import get_check, load_builtin_checks, run_check
from avoid321.models.config import Avoid321Settings
from avoid321.models.results import CheckReport

logger = logging.getLogger(__name__)


class VerificationPipeline:
    """Runs a batch of checks and returns their reports in request order.

    With ``threads > 1`` checks run in a process pool; otherwise they run one
    after another in the calling process. A check that raises aborts the
    batch: the error is logged and re-raised once every check has settled.
    """

    def __init__(self, settings: Avoid321Settings, threads: int = 1):
        self.settings = settings
        self.threads = max(1, threads)
        logger.info(f"VerificationPipeline initialized: threads={self.threads}")

    @staticmethod
    def available_checks() -> list[str]:
        """Registered check ids in registration order."""
        return list(load_builtin_checks())

    def resolve(self, requested: str | list[str]) -> list[str]:
        """Expand ``"all"`` and validate ids.

        Raises:
            InvalidArgumentError: If an id is unknown
        """
        ids = [requested] if isinstance(requested, str) else list(requested)
        resolved: list[str] = []
        for check_id in ids:
            if check_id == "all":
                resolved.extend(self.available_checks())
            else:
                resolved.append(get_check(check_id).check_id)
        return list(dict.fromkeys(resolved))

    def range_for(self, check_id: str, max_n: int | None, slow: bool = False) -> int:
        """Explicit max_n wins; otherwise the check's configured default.

        With ``slow`` the checks that default to ``fast_max_n`` use
        ``slow_max_n`` instead.
        """
        if max_n is not None:
            return max_n
        setting = get_check(check_id).range_setting
        if slow and setting == "fast_max_n":
            setting = "slow_max_n"
        return int(getattr(self.settings.verify, setting))

    async def run(
        self, requested: str | list[str], max_n: int | None = None, slow: bool = False
    ) -> list[CheckReport]:
        check_ids = self.resolve(requested)
        limit = self.settings.verify.enumeration_limit
        jobs = [(check_id, self.range_for(check_id, max_n, slow), limit) for check_id in check_ids]
        logger.info(f"Running {len(jobs)} checks: {', '.join(check_ids)}")

        if self.threads == 1:
            return [run_check(*job) for job in jobs]

        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            results = await self._gather(loop, pool, jobs)
        return results

    async def _gather(
        self,
        loop: asyncio.AbstractEventLoop,
        pool: Executor,
        jobs: list[tuple[str, int, int]],
    ) -> list[CheckReport]:
        tasks = [loop.run_in_executor(pool, run_check, *job) for job in jobs]
        outcomes = await asyncio.gather(*tasks, return_exceptions=True)

        reports: list[CheckReport] = []
        errors: list[BaseException] = []
        for (check_id, _, _), outcome in zip(jobs, outcomes):
            if isinstance(outcome, BaseException):
                logger.error(f"Check '{check_id}' raised: {outcome}")
                errors.append(outcome)
            else:
                reports.append(outcome)
        if errors:
            raise errors[0]
        return reports

    def run_sync(self, requested: str | list[str], max_n: int | None = None) -> list[CheckReport]:
        return asyncio.run(self.run(requested, max_n))
