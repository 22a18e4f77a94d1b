#
# For licensing see accompanying LICENSE file.
#

from loguru import logger

# library logging stays silent until an application enables it
logger.disable('sextic')
