from ._bridgekit import *  # noqa: F401,F403
from ._bridgekit import __doc__  # noqa: F401
