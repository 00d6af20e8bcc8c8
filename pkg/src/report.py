"""Terminal rendering of profiles, colorings and the result table."""
import math
from typing import Any, Dict, List, Optional

from .data.schemas import CellStatus, ClassProfile, ColorerResult, ReportRow, Violation
from .graph.classify import g3_label


# ANSI colours for terminal output
class Colors:
    HEADER = '\033[95m'
    BLUE = '\033[94m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'


GLYPHS = {
    CellStatus.PROVEN_CONSTRUCTIVE: "✅",
    CellStatus.PROVEN_WITH_FALLBACK: "🩹",
    CellStatus.PROVEN_SOLVER: "✅",
    CellStatus.CITED: "📚",
    CellStatus.DISPROVEN: "❌",
    CellStatus.CONJECTURED: "❔",
    CellStatus.OPEN: "❔",
    CellStatus.FAILED: "⚠️",
    CellStatus.TIMEOUT: "⏱️",
}


def color_rate(rate: Optional[float]) -> str:
    """Pass rate coloured by how close it is to 1"""
    if rate is None:
        return "-"
    if rate >= 1.0:
        return f"{Colors.GREEN}{rate:.1%}{Colors.ENDC}"
    elif rate >= 0.9:
        return f"{Colors.YELLOW}{rate:.1%}{Colors.ENDC}"
    else:
        return f"{Colors.RED}{rate:.1%}{Colors.ENDC}"


def print_header(title: str):
    print(f"\n{Colors.HEADER}{Colors.BOLD}{'='*60}{Colors.ENDC}")
    print(f"{Colors.HEADER}{Colors.BOLD}{title:^60}{Colors.ENDC}")
    print(f"{Colors.HEADER}{Colors.BOLD}{'='*60}{Colors.ENDC}")


def _number(x: float) -> str:
    return "inf" if math.isinf(x) else str(int(x))


def profile_text(profile: ClassProfile) -> str:
    lines = [
        f"delta={profile.max_degree} min_degree={profile.min_degree}",
        f"saturation={profile.saturation} three_k={profile.three_k} g3={g3_label(profile.g3)}",
        f"claw_free={profile.claw_free} connected={profile.connected}",
        f"diamond={list(profile.diamond) if profile.diamond else None}",
        f"heavy={profile.heavy} rich={profile.rich}",
        "girth=" + " ".join(_number(x) for x in profile.girth_profile),
    ]
    return "\n".join(lines)


def profile_json(profile: ClassProfile) -> Dict[str, Any]:
    data = profile.model_dump()
    data["g3"] = g3_label(profile.g3)
    data["girth_profile"] = [_number(x) for x in profile.girth_profile]
    return data


def result_text(result: ColorerResult) -> str:
    lines = [f"✅ ({result.sequence})-packing coloring by {result.colorer}"]
    if result.used_fallback:
        lines.append("⚠️  completed by exact search")
    if result.repaired:
        lines.append("⚠️  patched by local repair")
    for flag, value in result.good_flags.items():
        lines.append(f"  {flag}: {value}")
    if result.trace:
        lines.append("  trace: " + " ".join(result.trace))
    return "\n".join(lines)


def violations_text(violations: List[Violation]) -> str:
    return "\n".join(
        f"❌ class {v.cls}: vertices {v.u} and {v.v} at distance {v.distance}" for v in violations
    )


def row_text(row: ReportRow) -> str:
    status = CellStatus(row.status)
    glyph = GLYPHS.get(status, " ")
    count = f"{row.passed}/{row.total} {color_rate(row.pass_rate)}" if row.total else ""
    extra = f" fallbacks={row.fallbacks}" if row.fallbacks else ""
    evidence = f" [{row.evidence}]" if row.evidence else ""
    return f"  {glyph} ({row.sequence:<16}) {status.value:<20} {count}{extra}{evidence}"


def render_table(rows: List[ReportRow]) -> str:
    """Rows grouped by class, in the order they were produced"""
    out: List[str] = []
    current = last_column = None
    for row in rows:
        key = (row.class_label, row.g3_label)
        if key != current:
            current = key
            out.append(f"\n{Colors.BOLD}{row.class_label}, g3 {row.g3_label}{Colors.ENDC}")
            last_column = None
        if row.column != last_column:
            last_column = row.column
            out.append(f" {row.column}:")
        out.append(row_text(row))
    return "\n".join(out)
