from textwrap import dedent

from django.core.management.base import CommandParser

from api.serializers import CliConfig
from api.verifier import VerdictKind, run_counterexample
from api.verifier.renderers import render_report
from core.management.base import ScenarioCommand


class Command(ScenarioCommand):
    """
    Joins a contractible complex M = cone(id)[s] of constants to the
    commutative operad over F_p and looks for homology in the arity-0 part
    """

    command_name = "counterexample"
    help = dedent(
        """
        Reproduce the failure of the coproduct COM with a free operad on a
        contractible complex of constants to be quasi-isomorphic to COM.

        Usage:

            python manage.py counterexample --ring Fp:2 --max-power 3 --s 0

        Exits 0 when a component with homology is found, 1 when every
        component up to --max-power is acyclic, 2 on usage errors.
        """
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--ring", default="Fp:2", help="Fp:<p>")
        parser.add_argument("--max-power", type=int, default=3)
        parser.add_argument("--s", type=int, default=0, help="Shift of M = cone(id)[s]")
        self.add_output_arguments(parser)

    def run(self, config: CliConfig) -> None:
        report = run_counterexample(config.ring.characteristic, config.max_power, config.s)
        self.emit(config, render_report(report, config.format), "counterexample")
        self.exit_for(report, VerdictKind.NOT_QISO)
