from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator


class Caps(BaseModel):
    """
    Size limits for group computations.

    Groups up to `max_exhaustive` keep a complete element store; groups up to
    `max_order` are handled through a stabilizer chain (membership and order
    only). `max_pairs` bounds the pair enumeration behind the degrees of
    nilpotence and solvability.
    """

    model_config = ConfigDict(frozen=True)

    max_order: PositiveInt = 1_000_000
    max_exhaustive: PositiveInt = 200_000
    max_pairs: PositiveInt = 5_000

    @model_validator(mode="after")
    def _exhaustive_within_hard_cap(self) -> "Caps":
        if self.max_exhaustive > self.max_order:
            raise ValueError("max_exhaustive must not exceed max_order")
        return self


DEFAULT_CAPS = Caps()


class VerifyConfig(BaseModel):
    """Settings of the `verify-paper` harness."""

    model_config = ConfigDict(frozen=True)

    caps: Caps = DEFAULT_CAPS
    max_bruteforce: PositiveInt = 5_000
    max_pair_check: PositiveInt = 2_000
    jobs: PositiveInt = 1
