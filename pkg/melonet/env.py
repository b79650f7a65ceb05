""" Environment management """

from typing import Union
import os
import dotenv

import melonet
from melonet.exceptions import DomainError

# Load the working-directory environment
dotenv.load_dotenv(dotenv.find_dotenv(usecwd=True))


def get_seed(seed: Union[int, None] = None, default: int = melonet.SEED) -> int:
    """ Resolves the seed of a run. An explicit seed overrides the `MELONET_SEED`
    environment variable, which overrides the default.

    Parameters
    ----------
    seed: `Union[int, None]`
        The seed supplied on the command-line, if any.
    default: `int`
        The seed used when neither is set.
    """
    if seed is not None:
        return int(seed)

    value = os.getenv(melonet.SEED_VARIABLE)
    if value is None or not value.strip():
        return default

    try:
        return int(value.strip())
    except ValueError:
        raise DomainError(
            "Invalid environment variable {%s=%s}. The seed must be an integer." % (
                melonet.SEED_VARIABLE,
                value
            )
        )
