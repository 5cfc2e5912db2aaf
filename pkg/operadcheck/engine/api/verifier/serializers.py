from rest_framework import serializers

from version import VERSION


class HomologySerializer(serializers.BaseSerializer):
    """Free ranks and torsion of a HomologyProfile, keyed by degree"""

    def to_representation(self, instance):
        return {
            "free_ranks": {str(degree): rank for degree, rank in instance.free_ranks.items()},
            "torsion": {
                str(degree): list(factors) for degree, factors in instance.torsion.items()
            },
        }


class ComponentRecordSerializer(serializers.Serializer):
    r = serializers.IntegerField()
    code = serializers.CharField()
    s_count = serializers.IntegerField()
    aut_order = serializers.IntegerField()
    dims = serializers.DictField(child=serializers.IntegerField())
    homology = HomologySerializer()
    acyclic = serializers.BooleanField()


class VerdictSerializer(serializers.Serializer):
    kind = serializers.CharField()
    witness = serializers.CharField(allow_null=True)
    reason = serializers.CharField(allow_null=True)


class ReportSerializer(serializers.Serializer):
    version = serializers.SerializerMethodField()
    scenario = serializers.CharField()
    params = serializers.DictField()
    components = ComponentRecordSerializer(many=True)
    verdict = VerdictSerializer()
    notes = serializers.SerializerMethodField()

    def get_version(self, report):
        return VERSION

    def get_notes(self, report):
        return _stringify_keys(report.notes)


class SurveyRowSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    s = serializers.IntegerField()
    least_failing_power = serializers.IntegerField(allow_null=True)
    powers = serializers.SerializerMethodField()

    def get_powers(self, row):
        return {str(m): HomologySerializer(profile).data for m, profile in row.powers.items()}


class SurveySerializer(serializers.Serializer):
    max_power = serializers.IntegerField()
    rows = SurveyRowSerializer(many=True)


def _stringify_keys(value):
    if isinstance(value, dict):
        return {str(key): _stringify_keys(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify_keys(item) for item in value]
    return value
