"""One line per acceptance criterion, filled in as the acceptance tests run."""
LINES: dict[int, str] = {}


def record(n: int, ok: bool, title: str, detail: str = "") -> bool:
    LINES[n] = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}" + (f" ({detail})" if detail else "")
    print(LINES[n])
    return ok
