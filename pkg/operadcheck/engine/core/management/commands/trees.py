from textwrap import dedent

from django.core.management.base import CommandParser

from api.serializers import CliConfig
from api.verifier.renderers import render_counts
from core.management.base import ScenarioCommand
from core.trees import canonical_code, enumerate_reduced, render


class Command(ScenarioCommand):
    command_name = "trees"
    help = dedent(
        """
        Count the isomorphism classes of reduced (r, n)-marked trees per |S|.

        Usage:

            python manage.py trees --r 0 --n 0 --max-s 2 --nullary yes --unary no --render
        """
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--r", type=int, default=0)
        parser.add_argument("--n", type=int, default=0)
        parser.add_argument("--max-s", type=int, default=2)
        parser.add_argument("--nullary", default="yes", help="Allow operad vertices of valence 0")
        parser.add_argument("--unary", default="no", help="Allow operad vertices of valence 1")
        parser.add_argument("--render", action="store_true", help="Include a drawing of every tree")
        self.add_output_arguments(parser)

    def run(self, config: CliConfig) -> None:
        classes = enumerate_reduced(
            config.r,
            config.n,
            config.max_s,
            allow_nullary=config.nullary,
            allow_unary=config.unary,
        )
        codes = {s: [str(canonical_code(t)) for t in trees] for s, trees in classes.items()}
        renderings = {}
        if config.render:
            renderings = {str(canonical_code(t)): render(t) for trees in classes.values() for t in trees}
        params = {
            "r": config.r,
            "n": config.n,
            "max_s": config.max_s,
            "nullary": config.nullary,
            "unary": config.unary,
        }
        self.emit(config, render_counts(params, codes, renderings, config.format), "trees")
