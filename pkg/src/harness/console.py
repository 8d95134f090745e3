"""
SemiPrim - Console Output
Colored terminal rendering of reports, verdicts, table checks and lemma runs.
"""

import sys

from colorama import Fore, Style, init

from src import config
from src.core.exact import to_text
from src.harness.bounds import STATUS_EXEMPT, STATUS_FAIL, STATUS_INFO, STATUS_PASS

init(autoreset=True)

BANNER = f"""
{Fore.CYAN}╔═══════════════════════════════════════════════════╗
║                                                   ║
║   {Fore.WHITE}S E M I P R I M{Fore.CYAN}   v{config.VERSION}                       ║
║                                                   ║
║   {Fore.GREEN}Semiprimitive Permutation Group Toolkit{Fore.CYAN}         ║
║                                                   ║
╚═══════════════════════════════════════════════════╝{Style.RESET_ALL}
"""

_TAGS = {
    STATUS_PASS: f"{Fore.GREEN}[PASS]{Style.RESET_ALL}",
    STATUS_FAIL: f"{Fore.RED}[FAIL]{Style.RESET_ALL}",
    STATUS_EXEMPT: f"{Fore.YELLOW}[EXEMPT]{Style.RESET_ALL}",
    STATUS_INFO: f"{Fore.CYAN}[INFO]{Style.RESET_ALL}",
}


def tag(status):
    return _TAGS[status]


def header(title, out=None):
    out = out or sys.stdout
    print(f"\n  {Fore.WHITE}{'='*50}{Style.RESET_ALL}", file=out)
    print(f"  {Fore.CYAN}{title}{Style.RESET_ALL}", file=out)
    print(f"  {Fore.WHITE}{'='*50}{Style.RESET_ALL}", file=out)


def progress(message):
    print(f"  {Fore.CYAN}... {message}{Style.RESET_ALL}", file=sys.stderr)


def print_verdicts(verdicts, out=None):
    out = out or sys.stdout
    for v in verdicts:
        line = f"  {tag(v.status)} {v.bound_id:15s} {to_text(v.lhs)}  vs  {to_text(v.rhs)}"
        if v.exemption_reason:
            line += f"  ({v.exemption_reason})"
        print(line, file=out)


def print_report(report, out=None):
    out = out or sys.stdout
    header(report.name.upper(), out)
    print(f"  Degree:        {Fore.GREEN}{report.degree}{Style.RESET_ALL}", file=out)
    print(f"  Order:         {Fore.GREEN}{report.order}{Style.RESET_ALL}", file=out)
    print(f"  Taxonomy:      {Fore.GREEN}{report.label}{Style.RESET_ALL}", file=out)
    antiplinths = ", ".join(f"{o} ({k} orbits)" for o, k in report.antiplinths) or "-"
    print(f"  Antiplinths:   {antiplinths}", file=out)
    print(f"  Plinths:       {', '.join(str(o) for o in report.plinths) or '-'}", file=out)
    if report.metrics:
        m = report.metrics
        print(f"  Base size:     {m.base_size}  base {[b + 1 for b in m.base]}", file=out)
        print(f"  Min degree:    {'-' if m.minimal_degree is None else m.minimal_degree}", file=out)
        print(f"  fpr:           {'-' if m.fpr is None else to_text(m.fpr)}", file=out)
        print(f"  Chief length:  {m.chief_length}", file=out)
    if report.verdicts:
        print(file=out)
        print_verdicts(report.verdicts, out)
    if report.classification:
        c = report.classification
        row = c.row_key or "no table row"
        print(f"\n  Classification: case {Fore.GREEN}{c.theorem_case}{Style.RESET_ALL}, {row}", file=out)
        for claim in c.verified_claims:
            print(f"    {claim.name}: {to_text(claim.lhs)} = {to_text(claim.rhs)}", file=out)


def print_error(entry, out=None):
    out = out or sys.stdout
    print(f"  {Fore.RED}[ERROR]{Style.RESET_ALL} {entry['name']}: {entry['error']}", file=out)


def print_entries(entries, out=None):
    for entry in entries:
        if isinstance(entry, dict):
            print_error(entry, out)
        else:
            print_report(entry, out)


def print_summary(counts, out=None):
    out = out or sys.stdout
    header("SUMMARY", out)
    print(f"  Groups:        {counts['groups']}", file=out)
    for status in (STATUS_PASS, STATUS_FAIL, STATUS_EXEMPT, STATUS_INFO):
        print(f"  {tag(status)} {counts[status]}", file=out)
    color = Fore.RED if counts["errors"] else Fore.GREEN
    print(f"  Errors:        {color}{counts['errors']}{Style.RESET_ALL}", file=out)


def print_tables(checks, out=None):
    out = out or sys.stdout
    header("EXCEPTIONAL GROUP TABLES", out)
    print(f"  {'name':14s} {'order':>8s} {'n':>5s} {'b':>3s} {'m':>5s}", file=out)
    for check in checks:
        order, degree, b, m = check.computed
        status = STATUS_PASS if check.matches else STATUS_FAIL
        print(f"  {check.name:14s} {order:8d} {degree:5d} {b:3d} {m:5d}  {tag(status)}", file=out)
        if not check.matches:
            print(f"    expected {check.expected}", file=out)


def print_lemmas(reports, quotient_results=(), out=None):
    out = out or sys.stdout
    header("NUMERICAL LEMMAS", out)
    for report in reports:
        status = STATUS_PASS if report.passed else STATUS_FAIL
        print(f"  {tag(status)} {report.name}  ({report.checked} cases)", file=out)
        if report.failures:
            print(f"    failures: {list(report.failures)}", file=out)
    if quotient_results:
        header("QUOTIENT LEMMAS", out)
        for name, results in quotient_results:
            for r in results:
                status = STATUS_PASS if r.holds else STATUS_FAIL
                print(
                    f"  {tag(status)} {name} |M|={r.antiplinth_order}: "
                    f"b {r.base_size} <= {r.image_base_size}, "
                    f"m {r.minimal_degree} >= {r.block_size}*{r.image_minimal_degree}",
                    file=out,
                )
