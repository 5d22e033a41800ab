from sqlalchemy import Column, Integer, String, Float, ForeignKey, JSON, Text
from sqlalchemy.orm import relationship
from persistence.db_connection import Base


class CheckRecord(Base):
    __tablename__ = "check_records"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("verification_runs.id"), nullable=False)

    name = Column(String(64), nullable=False)
    group = Column(String(32), nullable=False)
    scope = Column(String(255), nullable=True)
    status = Column(String(10), nullable=False)  # pass / fail / error
    checked = Column(Integer, default=0)
    counterexamples = Column(JSON, nullable=True)
    error = Column(Text, nullable=True)
    seconds = Column(Float, nullable=True)

    run = relationship("VerificationRun", back_populates="checks")
