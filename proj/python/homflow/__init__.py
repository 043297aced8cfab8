from ._homflow import *  # noqa: F401,F403
from ._homflow import __doc__  # noqa: F401
