#
# For licensing see accompanying LICENSE file.
#

import sys

sys.path.append('.')

from sextic.cli.app import run


if __name__=='__main__':
    sys.exit(run(sys.argv[1:]))
