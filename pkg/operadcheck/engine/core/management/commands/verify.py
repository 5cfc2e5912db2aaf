from textwrap import dedent

from django.core.management.base import CommandParser

from api.serializers import CliConfig
from api.verifier import VerdictKind, run_case_i, run_case_ii
from api.verifier.renderers import render_report
from core.algebra import RingDescriptor
from core.management.base import ScenarioCommand


class Command(ScenarioCommand):
    command_name = "verify"
    help = dedent(
        """
        Check that O -> O coproduct F(M, n) is a quasi-isomorphism on every
        tree component with |S| <= --max-s, for arities up to --r-max.

        Case i needs O(0) = 0 and n > 0 and runs over any ring; case ii runs
        over Q.

        Usage:

            python manage.py verify --case i --operad com-nonunital --n 1 --ring Fp:2 --r-max 2 --max-s 3
            python manage.py verify --case ii --operad com --n 0 --r-max 1 --max-s 3
            python manage.py verify --case ii --operad-file collections.json --operad-name DUAL --n 1
        """
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--case", choices=["i", "ii"])
        self.add_collection_arguments(parser)
        parser.add_argument("--ring", help="Q, Z or Fp:<p> (case i; case ii is always Q)")
        parser.add_argument("--n", type=int, default=0)
        parser.add_argument("--s", type=int, default=0)
        parser.add_argument("--r-max", type=int, default=2)
        parser.add_argument("--max-s", type=int, default=2)
        self.add_output_arguments(parser)

    def run(self, config: CliConfig) -> None:
        if config.case == "i":
            ring = config.ring or RingDescriptor.rationals()
            o = self.collection(config, ring)
            report = run_case_i(o, config.n, ring, config.r_max, config.max_s, config.s)
        else:
            o = self.collection(config, RingDescriptor.rationals())
            report = run_case_ii(o, config.n, config.r_max, config.max_s, config.s)
        self.emit(config, render_report(report, config.format), f"verify-{config.case}")
        self.exit_for(report, VerdictKind.QISO_UP_TO_TRUNCATION)
