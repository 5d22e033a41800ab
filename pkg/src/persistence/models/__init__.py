# models: VerificationRun, CheckRecord
