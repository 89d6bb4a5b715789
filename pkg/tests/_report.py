"""Collects one pass/fail line per acceptance criterion."""

import functools

LINES: list[str] = []


def criterion(number: int, summary: str):
    def wrap(test):
        @functools.wraps(test)
        def run(*args, **kwargs):
            try:
                detail = test(*args, **kwargs)
            except BaseException as e:
                LINES.append(f"FAIL criterion {number}: {summary} ({type(e).__name__}: {str(e)[:200]})")
                print(LINES[-1])
                raise
            LINES.append(f"PASS criterion {number}: {summary}" + (f" [{detail}]" if detail else ""))
            print(LINES[-1])

        return run

    return wrap
