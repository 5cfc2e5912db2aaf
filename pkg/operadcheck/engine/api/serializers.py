from dataclasses import dataclass, field
from pathlib import Path

from django.conf import settings
from rest_framework import serializers
from rest_framework.serializers import ValidationError

from core.algebra import InvalidRingError, RingDescriptor
from core.operads import OPERAD_REGISTRY, normalize_operad_name


@dataclass(frozen=True)
class CliConfig:
    command: str
    ring: RingDescriptor | None = None
    operad: str | None = None
    operad_file: Path | None = None
    operad_name: str | None = None
    case: str | None = None
    code: str | None = None
    n: int = 0
    s: int = 0
    r: int = 0
    r_max: int = 0
    max_s: int = 0
    max_power: int = 3
    nullary: bool = True
    unary: bool = False
    render: bool = False
    primes: tuple[int, ...] = ()
    shifts: tuple[int, ...] = ()
    format: str = "json"
    output: Path | None = field(default=None)

    def output_path(self, stem: str) -> Path | None:
        """
        The explicit --output path, else a file in the configured report
        directory, else None for standard output
        """
        if self.output is not None:
            return self.output
        if settings.REPORT_OUTPUT_DIR:
            return Path(settings.REPORT_OUTPUT_DIR) / f"{stem}.{self.format}"
        return None


def _integer_list(value: str) -> tuple[int, ...]:
    try:
        items = tuple(int(item) for item in value.split(",") if item.strip())
    except ValueError:
        raise ValidationError("Expected a comma-separated list of integers.")
    if not items or any(item < 0 for item in items):
        raise ValidationError("Expected at least one non-negative integer.")
    return items


def _yes_no(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in {"yes", "y", "true", "1"}:
        return True
    if text in {"no", "n", "false", "0"}:
        return False
    raise ValidationError("Expected yes or no.")


class CliConfigSerializer(serializers.Serializer):
    """
    Validates the options of a management command and turns them into a
    CliConfig
    """

    command = serializers.ChoiceField(
        choices=["counterexample", "verify", "trees", "component", "survey"]
    )
    ring = serializers.CharField(required=False, allow_null=True)
    operad = serializers.CharField(required=False, allow_null=True)
    operad_file = serializers.CharField(required=False, allow_null=True)
    operad_name = serializers.CharField(required=False, allow_null=True)
    case = serializers.ChoiceField(choices=["i", "ii"], required=False, allow_null=True)
    code = serializers.CharField(required=False, allow_null=True)
    n = serializers.IntegerField(min_value=0, default=0)
    s = serializers.IntegerField(min_value=0, default=0)
    r = serializers.IntegerField(min_value=0, default=0)
    r_max = serializers.IntegerField(min_value=0, default=0)
    max_s = serializers.IntegerField(min_value=0, default=0)
    max_power = serializers.IntegerField(min_value=0, default=3)
    nullary = serializers.CharField(required=False, default="yes")
    unary = serializers.CharField(required=False, default="no")
    render = serializers.BooleanField(default=False)
    primes = serializers.CharField(required=False, allow_null=True)
    shifts = serializers.CharField(required=False, allow_null=True)
    format = serializers.ChoiceField(choices=["json", "tsv"], default="json")
    output = serializers.CharField(required=False, allow_null=True)

    def validate_ring(self, value):
        if value is None:
            return None
        try:
            return RingDescriptor.parse(value)
        except InvalidRingError as exc:
            raise ValidationError(exc.message)

    def validate_operad(self, value):
        if value is None:
            return None
        name = normalize_operad_name(value)
        if name not in OPERAD_REGISTRY:
            raise ValidationError(
                f"Unknown operad {value!r}; expected one of {', '.join(OPERAD_REGISTRY)}."
            )
        return name

    def validate_operad_file(self, value):
        if value is None:
            return None
        path = Path(value)
        if not path.is_file():
            raise ValidationError(f"No such file: {value}")
        return path

    def validate_nullary(self, value):
        return _yes_no(value)

    def validate_unary(self, value):
        return _yes_no(value)

    def validate_primes(self, value):
        if value is None:
            return ()
        primes = _integer_list(value)
        for p in primes:
            try:
                RingDescriptor.prime_field(p)
            except InvalidRingError as exc:
                raise ValidationError(exc.message)
        return primes

    def validate_shifts(self, value):
        return () if value is None else _integer_list(value)

    def validate_output(self, value):
        return None if value is None else Path(value)

    def validate(self, attrs: dict) -> dict:
        command = attrs["command"]
        if command == "counterexample":
            ring = attrs.get("ring")
            if ring is None or ring.characteristic == 0:
                raise ValidationError(
                    {"ring": "The counterexample scenario requires positive characteristic (Fp:<p>)."}
                )
        if command == "verify" and not attrs.get("case"):
            raise ValidationError({"case": "Choose case i or ii."})
        if command == "verify" and attrs.get("case") == "ii":
            ring = attrs.get("ring")
            if ring is not None and ring != RingDescriptor.rationals():
                raise ValidationError({"ring": "Case ii runs over Q only."})
        if command in {"verify", "component"}:
            if bool(attrs.get("operad")) == bool(attrs.get("operad_file")):
                raise ValidationError(
                    {"operad": "Give exactly one of --operad and --operad-file."}
                )
        if command == "component" and not attrs.get("code"):
            raise ValidationError({"code": "A canonical code is required."})
        if command == "survey" and not (attrs.get("primes") and attrs.get("shifts")):
            raise ValidationError({"primes": "Give --primes and --shifts."})
        return attrs

    def create(self, validated_data: dict) -> CliConfig:
        return CliConfig(**validated_data)
