from sqlalchemy.orm import Session
from typing import List
from persistence.models.check_record import CheckRecord
from verification.report import MAX_COUNTEREXAMPLES, CheckResult


class CheckRecordRepository:
    def __init__(self, session: Session):
        self.session = session

    def add_result(self, run_id: int, result: CheckResult) -> CheckRecord:
        record = CheckRecord(
            run_id=run_id,
            name=result.name,
            group=result.group,
            scope=result.scope,
            status=result.status,
            checked=result.checked,
            counterexamples=result.counterexamples[:MAX_COUNTEREXAMPLES] or None,
            error=result.error,
            seconds=result.seconds,
        )
        self.session.add(record)
        self.session.commit()
        return record

    def get_by_run(self, run_id: int) -> List[CheckRecord]:
        return (
            self.session.query(CheckRecord)
            .filter_by(run_id=run_id)
            .order_by(CheckRecord.id)
            .all()
        )

    def failures(self, run_id: int) -> List[CheckRecord]:
        return (
            self.session.query(CheckRecord)
            .filter(CheckRecord.run_id == run_id, CheckRecord.status != "pass")
            .order_by(CheckRecord.id)
            .all()
        )
