"""Main application entry point: command-line surface."""
import sys
import logging
import argparse
from typing import List, Optional, TextIO

from src import __version__
from src.core.config import AppConfig
from src.core.database import ResultStore
from src.core.bijections import BIJECTIONS, BijectionError
from src.core.formulas import FormulaDomainError
from src.core.numbers import InexactDivisionError
from src.core.oeis import CONJECTURES, BFileParseError, UnknownConjectureError, UnknownSequenceError
from src.core.patterns import CapExceededError, EngineMismatchError
from src.controllers.count_controller import METHODS, TRIANGLES, CountController
from src.controllers.bijection_controller import BijectionController
from src.controllers.sequence_controller import SequenceController
from src.models.dyck_path import DyckPathError
from src.models.parking_function import ParkingFunctionError
from src.models.permutation import PatternSet, PermutationError
from src.models.sequence import Verdict
from src.models.tree import TreeFormatError
from src.ui.renderers import FORMATS, Renderer
from src.ui.theme_manager import ThemeManager

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INSUFFICIENT = 4

DOMAIN_ERRORS = (
    CapExceededError,
    PermutationError,
    ParkingFunctionError,
    DyckPathError,
    TreeFormatError,
    BijectionError,
    FormulaDomainError,
    InexactDivisionError,
    BFileParseError,
    UnknownSequenceError,
    UnknownConjectureError,
    LookupError,
    ValueError,
)

# first index of each triangle's rows
TRIANGLE_FIRST_K = {"a": 1, "b": 2, "d": 0, "h": 1}


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="alternate config file (default ~/.pfavoid/config.json)")
    common.add_argument("--threads", type=int, help="worker processes for counting (default from config: 1)")
    common.add_argument("--format", choices=FORMATS, help="output format (default from config: text)")
    common.add_argument("--bfile-dir", help="directory of OEIS b-files b<digits>.txt")
    common.add_argument("--cache", action="store_true", help="reuse and store counts in the result cache")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(
        prog="pfavoid",
        description="Count, list and verify pattern-avoiding parking functions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common], help="pf_n for one pattern set")
    count.add_argument("--patterns", required=True, help="comma-separated patterns, e.g. 231,321")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--method", choices=METHODS, default="all",
                       help="engine to use; all runs every feasible one (default: all)")

    table = commands.add_parser("table", parents=[common], help="recompute a published table")
    table.add_argument("--set-size", type=int, choices=range(1, 6), required=True)
    table.add_argument("--max-n", type=int, help="largest n (default from config: 6)")
    table.add_argument("--method", choices=METHODS, default="all")

    listing = commands.add_parser("enumerate", parents=[common], help="list parking functions")
    listing.add_argument("--n", type=int, required=True)
    listing.add_argument("--patterns", help="only those avoiding these patterns")

    bijection = commands.add_parser("bijection", parents=[common], help="run a bijection over its domain")
    bijection.add_argument("--name", choices=BIJECTIONS, required=True)
    bijection.add_argument("--n", type=int, required=True)
    bijection.add_argument("--verify", action="store_true", help="also compare the image with a full enumeration")

    conjecture = commands.add_parser("conjecture", parents=[common], help="check an open conjecture on a finite range")
    conjecture.add_argument("--name", choices=list(CONJECTURES) + ["all"], required=True)
    conjecture.add_argument("--max-n", type=int)

    oeis = commands.add_parser("oeis", parents=[common], help="compare an OEIS entry with computed values")
    oeis.add_argument("--id", required=True, dest="sequence_id")
    oeis.add_argument("--max-n", type=int)

    triangle = commands.add_parser("triangle", parents=[common], help="print a(n,k), b(n,k), d(n,k) or h(n,m)")
    triangle.add_argument("--name", choices=sorted(TRIANGLES), required=True)
    triangle.add_argument("--max-n", type=int, default=10)

    wilf = commands.add_parser("wilf", parents=[common], help="group admissible sets by their counts")
    wilf.add_argument("--set-size", type=int, choices=range(1, 6), required=True)
    wilf.add_argument("--max-n", type=int, default=6)
    wilf.add_argument("--method", choices=METHODS, default="permsum")
    return parser


def configure_logging(verbosity: int, default_level: str = "WARNING"):
    """Set the root log level from -v flags or the configured default."""
    logging.basicConfig(format=LOG_FORMAT)
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.getLevelName(default_level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.getLogger().setLevel(level)


class PFAvoidApp:
    """Wires configuration, result cache and controllers behind the CLI."""

    def __init__(self, args: argparse.Namespace, stdout: Optional[TextIO] = None):
        """Initialize the application."""
        self.args = args
        self.out = stdout if stdout is not None else sys.stdout

        # Initialize core services
        self.config = AppConfig(config_file=args.config)
        configure_logging(args.verbose, self.config.get("log_level", "WARNING"))
        self.threads = args.threads or self.config.get("threads", 1)
        use_cache = args.cache or self.config.get("use_cache", False)
        self.store = ResultStore(self.config.db_file) if use_cache else None

        # Initialize controllers
        self.count_controller = CountController(self.config, self.store, self.threads)
        self.bijection_controller = BijectionController(self.config.get("naive_cap"))
        self.sequence_controller = SequenceController(
            self.count_controller, self.config.resolve_bfile_dir(args.bfile_dir), self.threads,
            self.config.get("conjecture_max_n"),
        )

        theme = ThemeManager(self.config.get("theme"), self.config.get("color"), self.out)
        self.renderer = Renderer(args.format or self.config.get("default_format"), theme)
        logger.info("PFAvoid initialized")

    def run(self) -> int:
        """Run the selected command and return its exit status."""
        handler = getattr(self, f"_cmd_{self.args.command}")
        try:
            return handler()
        except EngineMismatchError as e:
            logger.error(f"Engine disagreement: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_MISMATCH
        except DOMAIN_ERRORS as e:
            logger.error(f"Command {self.args.command} failed: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_DOMAIN
        finally:
            if self.store is not None:
                self.store.close()

    def _emit(self, text: str):
        print(text, file=self.out)

    def _cmd_count(self) -> int:
        """Count one pattern set."""
        pattern_set = PatternSet.from_text(self.args.patterns)
        row = self.count_controller.count(pattern_set, self.args.n, self.args.method)
        self._emit(self.renderer.count_rows([row]))
        return EXIT_OK if row.agrees else EXIT_MISMATCH

    def _cmd_table(self) -> int:
        """Recompute a published table."""
        max_n = self.args.max_n or self.config.get("table_max_n")
        lines = self.count_controller.table(self.args.set_size, max_n, self.args.method)
        self._emit(self.renderer.table_lines(lines))
        return EXIT_OK if all(line.matches_published for line in lines) else EXIT_MISMATCH

    def _cmd_enumerate(self) -> int:
        """List parking functions."""
        pattern_set = PatternSet.from_text(self.args.patterns) if self.args.patterns else None
        pfs = self.count_controller.enumerate(self.args.n, pattern_set)
        self._emit(self.renderer.listing(pfs))
        return EXIT_OK

    def _cmd_bijection(self) -> int:
        """Verify a bijection."""
        report = self.bijection_controller.verify(self.args.name, self.args.n, self.args.verify)
        self._emit(self.renderer.bijection(report))
        return EXIT_OK if report.passed else EXIT_MISMATCH

    def _cmd_conjecture(self) -> int:
        """Run one or all conjecture checks."""
        max_n = self.args.max_n
        names = list(CONJECTURES) if self.args.name == "all" else [self.args.name]
        reports = []
        for name in names:
            reports.extend(self.sequence_controller.conjecture(name, max_n))
        self._emit(self.renderer.comparisons(reports))
        return self._verdict_status([report.verdict for report in reports])

    def _cmd_oeis(self) -> int:
        """Compare an OEIS entry with computed values."""
        report = self.sequence_controller.oeis(self.args.sequence_id, self.args.max_n)
        self._emit(self.renderer.comparisons([report]))
        return self._verdict_status([report.verdict])

    def _cmd_triangle(self) -> int:
        """Print a triangle and compare b with its printed rows."""
        name = self.args.name
        rows = self.count_controller.triangle(name, self.args.max_n)
        published = self.count_controller.published_b_rows(self.args.max_n) if name == "b" else None
        self._emit(self.renderer.triangle(name, rows, TRIANGLE_FIRST_K[name], published))
        if published is not None and rows[:len(published)] != published:
            return EXIT_MISMATCH
        return EXIT_OK

    def _cmd_wilf(self) -> int:
        """Group admissible sets and compare with the tables."""
        classes = self.count_controller.wilf(self.args.set_size, self.args.max_n, self.args.method)
        published = self.count_controller.published_grouping(self.args.set_size)
        self._emit(self.renderer.wilf(classes, published))
        same = {frozenset(group) for group in classes} == {frozenset(group) for group in published}
        return EXIT_OK if same else EXIT_MISMATCH

    @staticmethod
    def _verdict_status(verdicts: List[Verdict]) -> int:
        if any(verdict is Verdict.MISMATCH for verdict in verdicts):
            return EXIT_MISMATCH
        if verdicts and all(verdict is Verdict.INSUFFICIENT_DATA for verdict in verdicts):
            return EXIT_INSUFFICIENT
        return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Application entry point; argparse exits with status 2 on usage errors."""
    args = build_parser().parse_args(argv)
    app = PFAvoidApp(args)
    return app.run()


if __name__ == "__main__":
    sys.exit(main())
