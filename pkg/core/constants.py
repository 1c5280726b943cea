from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import ClassVar, Literal
from fractions import Fraction


class Settings(BaseSettings):
    """
    Project-wide configuration and constants. Use as a singleton via Settings().
    Supports environment variable overrides (prefix GRADESTAB_) so batch runs can
    tune the checks without editing code.
    """
    LOG_LEVEL: str = Field('INFO', description='Root log level for the CLI and the HTTP app')

    CESARO_TOLERANCE: str = Field(
        '1/50',
        description='Documented bound on |cesaro_residual(S, 256)| used by the convergence checks',
    )
    DESCENT_CAP_SLACK: int = Field(
        1, ge=0, description='Extra iterations allowed on top of ceil(phi_0/delta) + rank'
    )
    COMPARE_TRANSLATE_SLACK: int = Field(
        1, ge=0, description='Multiples of delta added to the translate search bound of compare_optimal'
    )

    EXAMPLES_FIXTURE: str = Field(
        'fixtures/expected_examples.json', description='Expected values checked by verify-examples'
    )
    VERIFY_GENUS_MAX: int = Field(5, ge=0, description='Largest genus in the cone-over-curve grid')
    VERIFY_DEGREE_MAX: int = Field(3, ge=1, description='Largest deg(L) in the cone-over-curve grid')
    MAX_EXPONENT: int = Field(100, ge=1, description='Largest exponent accepted in a polynomial string')
    FIXTURES_DIR: str = Field('fixtures', description='Directory the HTTP verify endpoint may read fixtures from')

    # Report vocabulary
    STATUS_OK: str = Field('ok', description='Report status for a successful command')
    STATUS_FAILED: str = Field('failed', description='Report status for a failed verification')
    STATUS_ERROR: str = Field('error', description='Report status for a rejected or broken command')
    INFINITY_TOKEN: str = Field('inf', description='Serialized form of an infinite valuation value')

    # Types

    Status: ClassVar = Literal['ok', 'failed', 'error']

    # Exit codes
    EXIT_OK: ClassVar[int] = 0
    EXIT_VERIFICATION: ClassVar[int] = 1
    EXIT_INPUT: ClassVar[int] = 2
    EXIT_INVARIANT: ClassVar[int] = 3

    model_config = SettingsConfigDict(
        env_prefix='GRADESTAB_',
        env_file='.env',
        env_file_encoding='utf-8',
        validate_assignment=True,
        extra='ignore'
    )


k = Settings()

LOG_LEVEL = k.LOG_LEVEL
CESARO_TOLERANCE = Fraction(k.CESARO_TOLERANCE)
DESCENT_CAP_SLACK = k.DESCENT_CAP_SLACK
COMPARE_TRANSLATE_SLACK = k.COMPARE_TRANSLATE_SLACK
EXAMPLES_FIXTURE = k.EXAMPLES_FIXTURE
VERIFY_GENUS_MAX = k.VERIFY_GENUS_MAX
VERIFY_DEGREE_MAX = k.VERIFY_DEGREE_MAX
MAX_EXPONENT = k.MAX_EXPONENT
FIXTURES_DIR = k.FIXTURES_DIR

STATUS_OK = k.STATUS_OK
STATUS_FAILED = k.STATUS_FAILED
STATUS_ERROR = k.STATUS_ERROR
INFINITY_TOKEN = k.INFINITY_TOKEN

Status = k.Status

EXIT_OK = Settings.EXIT_OK
EXIT_VERIFICATION = Settings.EXIT_VERIFICATION
EXIT_INPUT = Settings.EXIT_INPUT
EXIT_INVARIANT = Settings.EXIT_INVARIANT
