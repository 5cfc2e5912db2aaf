import abc
import logging
from typing import Iterable, Union

from core.algebra import InvalidRingError, RingDescriptor, UnsupportedRingError
from core.complexes import homology
from core.operads import (
    CommutativeOperad,
    ComponentTooLargeError,
    CoproductTruncation,
    GeneratorCollection,
    SymmetricCollection,
    builtin_operad,
    coproduct_component,
    make_generator_collection,
    tree_component,
    verdict_for,
)

from .exceptions import OracleMismatchError, ScenarioPreconditionError
from .oracles import symmetric_power_oracle
from .reports import ComponentRecord, Report, Survey, SurveyRow, Verdict

logger = logging.getLogger("engine")

OperadSelector = Union[str, SymmetricCollection]


class IVerifierService(abc.ABC):
    @abc.abstractmethod
    def run_counterexample(self, p: int, max_power: int, s: int = 0) -> Report:
        """
        Interface method for the arity-0 coproduct of COM with a contractible
        complex of constants in characteristic p
        """
        pass

    @abc.abstractmethod
    def run_case_i(
        self,
        operad: OperadSelector,
        n: int,
        ring: RingDescriptor,
        r_max: int,
        max_s: int,
        s: int = 0,
    ) -> Report:
        """
        Interface method for operads without constants and generators of
        positive arity
        """
        pass

    @abc.abstractmethod
    def run_case_ii(
        self, operad: OperadSelector, n: int, r_max: int, max_s: int, s: int = 0
    ) -> Report:
        """
        Interface method for any operad over the rationals
        """
        pass

    @abc.abstractmethod
    def survey(self, primes: Iterable[int], shifts: Iterable[int], max_power: int) -> Survey:
        pass


def _resolve_operad(operad: OperadSelector, ring: RingDescriptor) -> SymmetricCollection:
    if isinstance(operad, SymmetricCollection):
        operad.ring.require_same(ring)
        return operad
    return builtin_operad(operad, ring)


def _records(r: int, truncation: CoproductTruncation) -> list[ComponentRecord]:
    return [ComponentRecord.from_verdict(r, verdict_for(part)) for part in truncation.parts]


def _first_witness(records: list[ComponentRecord]) -> ComponentRecord | None:
    failing = [c for c in records if c.s_count >= 1 and not c.acyclic]
    if not failing:
        return None
    return min(failing, key=lambda c: (c.s_count, c.r, c.code))


def _class_counts(records: list[ComponentRecord]) -> dict[str, dict[int, int]]:
    counts: dict[str, dict[int, int]] = {}
    for c in records:
        per_s = counts.setdefault(f"r={c.r}", {})
        per_s[c.s_count] = per_s.get(c.s_count, 0) + 1
    return counts


class VerifierService(IVerifierService):
    def run_counterexample(self, p: int, max_power: int, s: int = 0) -> Report:
        """
        Builds (COM coproduct F(M, 0))(0) up to |S| = max_power over F_p,
        checks its dimensions against the symmetric powers of M and reports
        the least power with homology
        """
        if max_power < 1:
            raise ScenarioPreconditionError("max_power must be at least 1")
        try:
            ring = RingDescriptor.prime_field(p)
        except InvalidRingError as exc:
            raise ScenarioPreconditionError(exc.message) from exc

        params = {"ring": ring.label, "operad": "COM", "n": 0, "s": s, "r": 0, "max_s": max_power}
        logger.info(f"Scenario | COUNTEREXAMPLE | p={p} | max_power={max_power} | s={s}")

        gen = make_generator_collection(ring, 0, s)
        truncation = coproduct_component(CommutativeOperad(ring), gen, 0, 0, max_power)

        oracle_dims = {m: symmetric_power_oracle(gen.m_complex, m).dims for m in range(max_power + 1)}
        expected: dict[int, int] = {}
        for dims in oracle_dims.values():
            for degree, dim in dims.items():
                expected[degree] = expected.get(degree, 0) + dim
        if truncation.total.dims != expected:
            logger.warning(
                f"Oracle mismatch | COUNTEREXAMPLE | trees={truncation.total.dims} | oracle={expected}"
            )
            raise OracleMismatchError(
                f"Arity-0 coproduct has dims {truncation.total.dims}, symmetric powers give {expected}"
            )

        records = _records(0, truncation)
        witness = _first_witness(records)
        notes = {
            "oracle_dims": oracle_dims,
            "least_failing_power": witness.s_count if witness else None,
            "class_counts": _class_counts(records),
        }
        if witness is None:
            verdict = Verdict.quasi_iso()
        else:
            self._reverify(CommutativeOperad(ring), gen, 0, witness)
            verdict = Verdict.not_quasi_iso(witness.code)
        logger.info(f"Verdict | COUNTEREXAMPLE | p={p} | {verdict.kind} | witness={verdict.witness}")
        return Report("COUNTEREXAMPLE", params, tuple(records), verdict, notes)

    def run_case_i(
        self,
        operad: OperadSelector,
        n: int,
        ring: RingDescriptor,
        r_max: int,
        max_s: int,
        s: int = 0,
    ) -> Report:
        """
        With O(0) = 0 and n > 0 every reduced tree is rigid, so no
        coinvariants are taken and the check runs over any ring
        """
        o = _resolve_operad(operad, ring)
        if o.has_nullary():
            raise ScenarioPreconditionError(f"{o.name} has operations of arity 0")
        if n < 1:
            raise ScenarioPreconditionError("Generators must have positive arity")
        return self._run_grid("CASE_I", o, n, r_max, max_s, s, require_rigid=True)

    def run_case_ii(
        self, operad: OperadSelector, n: int, r_max: int, max_s: int, s: int = 0
    ) -> Report:
        o = _resolve_operad(operad, RingDescriptor.rationals())
        return self._run_grid("CASE_II", o, n, r_max, max_s, s, require_rigid=False)

    def survey(self, primes: Iterable[int], shifts: Iterable[int], max_power: int) -> Survey:
        """
        For every (p, s), the least m <= max_power with H(S^m(M)) != 0 over F_p
        """
        rows = []
        for p in primes:
            try:
                ring = RingDescriptor.prime_field(p)
            except InvalidRingError as exc:
                raise ScenarioPreconditionError(exc.message) from exc
            for s in shifts:
                m_complex = make_generator_collection(ring, 0, s).m_complex
                powers = {
                    m: homology(symmetric_power_oracle(m_complex, m))
                    for m in range(1, max_power + 1)
                }
                least = next((m for m, profile in powers.items() if not profile.is_zero()), None)
                logger.info(f"Survey | p={p} | s={s} | least_failing_power={least}")
                rows.append(SurveyRow(p, s, powers, least))
        return Survey(max_power, tuple(rows))

    def _run_grid(
        self,
        scenario: str,
        o: SymmetricCollection,
        n: int,
        r_max: int,
        max_s: int,
        s: int,
        require_rigid: bool,
    ) -> Report:
        params = {
            "ring": o.ring.label,
            "operad": o.name,
            "n": n,
            "s": s,
            "r_max": r_max,
            "max_s": max_s,
        }
        logger.info(
            f"Scenario | {scenario} | {o.name} | {o.ring} | n={n} | r_max={r_max} | max_s={max_s} | s={s}"
        )
        gen = make_generator_collection(o.ring, n, s)
        records: list[ComponentRecord] = []
        try:
            for r in range(r_max + 1):
                truncation = coproduct_component(o, gen, n, r, max_s)
                if require_rigid:
                    rigid = [part for part in truncation.parts if part.aut.order != 1]
                    if rigid:
                        raise OracleMismatchError(
                            f"Reduced tree {rigid[0].code} has {rigid[0].aut.order} automorphisms"
                        )
                records.extend(_records(r, truncation))
        except (ComponentTooLargeError, UnsupportedRingError) as exc:
            logger.warning(f"Verdict | {scenario} | UNSUPPORTED | {exc.message}")
            return Report(
                scenario, params, tuple(records), Verdict.unsupported(exc.message),
                {"class_counts": _class_counts(records)},
            )

        witness = _first_witness(records)
        if witness is None:
            verdict = Verdict.quasi_iso()
        else:
            self._reverify(o, gen, witness.r, witness)
            verdict = Verdict.not_quasi_iso(witness.code)
            logger.warning(
                f"Verdict | {scenario} | {o.name} | NOT_QISO | witness={witness.code} "
                f"| contradicts the expected quasi-isomorphism"
            )
        notes = {
            "class_counts": _class_counts(records),
            "least_failing_power": witness.s_count if witness else None,
        }
        return Report(scenario, params, tuple(records), verdict, notes)

    def _reverify(
        self, o: SymmetricCollection, gen: GeneratorCollection, r: int, witness: ComponentRecord
    ) -> None:
        """Rebuild the witness component from its tree alone"""
        truncation = coproduct_component(o, gen, gen.n, r, witness.s_count)
        part = truncation.part(witness.code)
        if part is None:
            raise OracleMismatchError(f"Witness {witness.code} is not enumerated again")
        profile = homology(tree_component(o, gen, part.tree).component)
        if profile != witness.homology:
            raise OracleMismatchError(f"Witness {witness.code} does not reproduce its homology")


default_service = VerifierService()


def run_counterexample(p: int, max_power: int, s: int = 0) -> Report:
    return default_service.run_counterexample(p, max_power, s)


def run_case_i(
    operad: OperadSelector, n: int, ring: RingDescriptor, r_max: int, max_s: int, s: int = 0
) -> Report:
    return default_service.run_case_i(operad, n, ring, r_max, max_s, s)


def run_case_ii(operad: OperadSelector, n: int, r_max: int, max_s: int, s: int = 0) -> Report:
    return default_service.run_case_ii(operad, n, r_max, max_s, s)


def survey(primes: Iterable[int], shifts: Iterable[int], max_power: int) -> Survey:
    return default_service.survey(primes, shifts, max_power)
