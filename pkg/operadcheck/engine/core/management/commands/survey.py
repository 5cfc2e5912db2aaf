from textwrap import dedent

from django.core.management.base import CommandParser

from api.serializers import CliConfig
from api.verifier import survey
from api.verifier.renderers import render_survey
from core.management.base import ScenarioCommand


class Command(ScenarioCommand):
    command_name = "survey"
    help = dedent(
        """
        For each prime p and shift s, the least m <= --max-power such that the
        m-th symmetric power of cone(id)[s] has homology over F_p.

        Usage:

            python manage.py survey --primes 2,3 --shifts 0,1 --max-power 4
        """
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--primes", default="2,3")
        parser.add_argument("--shifts", default="0,1")
        parser.add_argument("--max-power", type=int, default=4)
        self.add_output_arguments(parser)

    def run(self, config: CliConfig) -> None:
        result = survey(config.primes, config.shifts, config.max_power)
        self.emit(config, render_survey(result, config.format), "survey")
