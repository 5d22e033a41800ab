from sqlalchemy import Column, Integer, String, DateTime, JSON
from sqlalchemy.orm import relationship
from datetime import datetime
from persistence.db_connection import Base


class VerificationRun(Base):
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, index=True)
    seed = Column(Integer, nullable=False)
    scope = Column(JSON, nullable=True)  # grafos y comprobaciones seleccionadas

    status = Column(String(20), default="running")  # running/passed/failed/error
    reason = Column(String(255), nullable=True)

    started_at = Column(DateTime, default=datetime.utcnow)
    ended_at = Column(DateTime, nullable=True)

    checks = relationship("CheckRecord", back_populates="run", order_by="CheckRecord.id")
