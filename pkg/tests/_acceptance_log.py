"""Shared registry so the acceptance tests can emit one visible line each."""

LINES: list[str] = []


def record(num: int, ok: bool, desc: str) -> None:
    line = f"CRITERION {num}: {'PASS' if ok else 'FAIL'} - {desc}"
    LINES.append(line)
    print(line, flush=True)
