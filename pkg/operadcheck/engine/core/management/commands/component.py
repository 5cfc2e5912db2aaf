import re
from textwrap import dedent

from django.core.management.base import CommandError, CommandParser

from api.serializers import CliConfig
from api.verifier import ComponentRecord
from api.verifier.renderers import render_component
from core.algebra import RingDescriptor
from core.management.base import USAGE, ScenarioCommand
from core.operads import make_generator_collection, tree_component, verdict_for
from core.trees import canonical_code, enumerate_reduced


class Command(ScenarioCommand):
    command_name = "component"
    help = dedent(
        """
        Dimensions and homology of the tree component with a given canonical
        code.

        Usage:

            python manage.py component --code "(O(S)(S))" --operad com --ring Fp:2 --n 0
        """
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--code", help="Canonical code, e.g. (O(A1)(S(A2)))")
        self.add_collection_arguments(parser)
        parser.add_argument("--ring", default="Q")
        parser.add_argument("--n", type=int, default=0)
        parser.add_argument("--s", type=int, default=0)
        self.add_output_arguments(parser)

    def run(self, config: CliConfig) -> None:
        code = config.code.strip()
        ring = config.ring or RingDescriptor.rationals()
        o = self.collection(config, ring)
        r = len(re.findall(r"\(A\d+", code))
        s_count = code.count("(S")

        classes = enumerate_reduced(
            r,
            config.n,
            s_count,
            allow_nullary=o.has_nullary(),
            allow_unary=o.has_reduced_unary(),
        )
        tree = next((t for t in classes[s_count] if str(canonical_code(t)) == code), None)
        if tree is None:
            raise CommandError(
                f"{code} is not a reduced ({r}, {config.n})-marked tree for {o.name}",
                returncode=USAGE,
            )
        gen = make_generator_collection(ring, config.n, config.s)
        record = ComponentRecord.from_verdict(r, verdict_for(tree_component(o, gen, tree)))
        self.emit(config, render_component(record, config.format), "component")
