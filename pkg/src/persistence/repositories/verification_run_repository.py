from sqlalchemy.orm import Session
from datetime import datetime
from typing import List, Optional
from persistence.models.verification_run import VerificationRun


class VerificationRunRepository:
    def __init__(self, session: Session):
        self.session = session

    def start(self, seed: int, scope: Optional[dict] = None) -> VerificationRun:
        run = VerificationRun(
            seed=seed,
            scope=scope,
            status="running",
            started_at=datetime.utcnow(),
        )
        self.session.add(run)
        self.session.commit()
        self.session.refresh(run)
        return run

    def end(self, run_db_id: int, status: str, reason: Optional[str] = None) -> VerificationRun | None:
        run = self.session.query(VerificationRun).filter_by(id=run_db_id).first()
        if not run:
            return None
        run.status = status
        run.reason = reason
        run.ended_at = datetime.utcnow()
        self.session.commit()
        return run

    def get(self, run_db_id: int) -> VerificationRun | None:
        return self.session.query(VerificationRun).filter_by(id=run_db_id).first()

    def latest(self, limit: int = 10) -> List[VerificationRun]:
        return (
            self.session.query(VerificationRun)
            .order_by(VerificationRun.started_at.desc())
            .limit(limit)
            .all()
        )
