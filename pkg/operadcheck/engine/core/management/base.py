import logging
from typing import Any

from django.core.management import BaseCommand
from django.core.management.base import CommandError, CommandParser

from api.serializers import CliConfig, CliConfigSerializer
from api.verifier import OracleMismatchError, Report, VerdictKind
from api.verifier.renderers import write_atomic
from core.algebra import RingDescriptor
from core.exceptions import EngineError
from core.operads import SymmetricCollection, builtin_operad, load_collection

logger = logging.getLogger("engine")

# exit statuses
CONFIRMED = 0
CONTRADICTED = 1
USAGE = 2


class ScenarioCommand(BaseCommand):
    """
    Shared plumbing for the verification commands: option validation through
    CliConfigSerializer, report output, and the mapping of engine errors and
    verdicts onto exit statuses
    """

    requires_system_checks: list[str] = []
    command_name: str = ""

    def add_output_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--format", choices=["json", "tsv"], default="json")
        parser.add_argument(
            "--output",
            help="File to write the report to (defaults to OPERADCHECK_OUTPUT_DIR or stdout)",
        )

    def add_collection_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--operad", help="Built-in operad: UNIT, COM, COM_NONUNITAL, ASSOC_NONUNITAL")
        parser.add_argument("--operad-file", help="JSON description of a symmetric collection")
        parser.add_argument("--operad-name", help="Collection to pick from a file holding several")

    def parse_config(self, options: dict[str, Any]) -> CliConfig:
        fields = CliConfigSerializer().fields
        data = {
            key: value
            for key, value in options.items()
            if key in fields and value is not None
        }
        data["command"] = self.command_name
        serializer = CliConfigSerializer(data=data)
        if not serializer.is_valid():
            problems = "; ".join(
                f"{field}: {' '.join(str(e) for e in errors)}"
                for field, errors in serializer.errors.items()
            )
            raise CommandError(problems, returncode=USAGE)
        return serializer.save()

    def collection(self, config: CliConfig, ring: RingDescriptor) -> SymmetricCollection:
        if config.operad_file is not None:
            return load_collection(config.operad_file, config.operad_name, ring)
        return builtin_operad(config.operad, ring)

    def emit(self, config: CliConfig, text: str, stem: str) -> None:
        path = config.output_path(stem)
        if path is None:
            self.stdout.write(text, ending="")
            return
        write_atomic(path, text)
        self.stderr.write(f"Report written to {path}")

    def exit_for(self, report: Report, expected: VerdictKind) -> None:
        kind = report.verdict.kind
        if kind is expected:
            self.stderr.write(self.style.SUCCESS(f"{report.scenario}: {kind}"))
            return
        if kind is VerdictKind.UNSUPPORTED:
            raise CommandError(f"{report.scenario}: {report.verdict.reason}", returncode=USAGE)
        raise CommandError(
            f"{report.scenario}: expected {expected}, got {kind}", returncode=CONTRADICTED
        )

    def run(self, config: CliConfig) -> None:
        raise NotImplementedError

    def handle(self, *args: Any, **options: Any) -> None:
        config = self.parse_config(options)
        try:
            self.run(config)
        except OracleMismatchError as exc:
            logger.error(f"Command | {self.command_name} | {exc.message}", exc_info=True)
            raise CommandError(exc.message, returncode=CONTRADICTED)
        except EngineError as exc:
            logger.error(f"Command | {self.command_name} | {exc.message}", exc_info=True)
            raise CommandError(exc.message, returncode=USAGE)
