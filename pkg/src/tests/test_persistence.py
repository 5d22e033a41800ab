from persistence.repositories.check_record_repository import CheckRecordRepository
from persistence.repositories.verification_run_repository import VerificationRunRepository
from verification.report import ERROR, FAIL, PASS, CheckResult


def test_run_lifecycle(db):
    session = db.get_session()
    try:
        runs = VerificationRunRepository(session)
        run = runs.start(seed=42, scope={"graphs": ["A2"], "checks": []})
        assert run.id is not None
        assert run.status == "running"
        assert run.ended_at is None

        ended = runs.end(run.id, "passed")
        assert ended.status == "passed"
        assert ended.ended_at is not None
        assert runs.get(run.id).scope == {"graphs": ["A2"], "checks": []}
        assert run.id in [r.id for r in runs.latest()]
    finally:
        session.close()


def test_end_unknown_run_returns_none(db):
    session = db.get_session()
    try:
        assert VerificationRunRepository(session).end(987654, "failed") is None
    finally:
        session.close()


def test_check_records_by_run(db):
    session = db.get_session()
    try:
        run = VerificationRunRepository(session).start(seed=1)
        records = CheckRecordRepository(session)
        records.add_result(run.id, CheckResult("euler", "rep-linear", "A2: 2 orientaciones", PASS, checked=18))
        records.add_result(run.id, CheckResult(
            "purity", "clusters", "A2", FAIL, checked=5,
            counterexamples=[{"cluster": [f"r{k}"]} for k in range(8)],
        ))
        records.add_result(run.id, CheckResult("formula", "census", "A3", ERROR, error="InvariantViolation: 14/3"))

        stored = records.get_by_run(run.id)
        assert [r.name for r in stored] == ["euler", "purity", "formula"]
        assert stored[0].counterexamples is None
        assert len(stored[1].counterexamples) == 5
        assert [r.name for r in records.failures(run.id)] == ["purity", "formula"]
        assert stored[2].run.seed == 1
    finally:
        session.close()
