#
# For licensing see accompanying LICENSE file.
#

'''
report rendering; text and json modes are built from the same report dict
'''

import json

from sextic.poly.core import Polynomial, format_complex, format_polynomial
from sextic.utils.general import complex_from_dict


def _chop(z, precision):
    # components below the printed resolution are shown as 0
    tiny = 10.0 ** -precision
    return complex(z.real if abs(z.real) >= tiny else 0.0, z.imag if abs(z.imag) >= tiny else 0.0)


def _value(v, precision):
    if isinstance(v, dict) and set(v.keys()) == {'re', 'im'}:
        return format_complex(_chop(complex_from_dict(v), precision), precision)
    if isinstance(v, float):
        return f'{v:.{precision}g}'
    return str(v)


def _row(values, precision):
    return ' '.join(_value(v, precision) for v in values)


def _poly(descending, precision, var='x'):
    return format_polynomial(Polynomial.from_descending(_chop(complex_from_dict(c), precision) for c in descending), precision, var)


def render_text(report, precision=10):
    lines = []
    status = report['status']
    if status != 'ok':
        lines.append(f"status: {status}")
        if 'message' in report:
            lines.append(f"message: {report['message']}")
        return '\n'.join(lines)

    if 'params' in report:
        params = report['params']
        lines.append('params: ' + ' '.join(f'{name}={_value(params[name], precision)}' for name in 'abcd'))
    if 'resolvent' in report:
        # leading 1, then the x^4 .. x^0 coefficients
        lines.append('resolvent: 1 ' + _row(report['resolvent'], precision))
        lines.append('resolvent_poly: ' + _poly([{'re': 1.0, 'im': 0.0}] + report['resolvent'], precision))
    if 'k' in report:
        lines.append(f"k: {_value(report['k'], precision)}")
        lines.append('quadratic: ' + _poly(report['quadratic'], precision))
        lines.append('cubic: ' + _poly(report['cubic'], precision))
        lines.append(f"product_residual: {_value(report['product_residual'], 3)}")
    if 'ascending' in report:
        lines.append('ascending: ' + _row(report['ascending'], precision))
        lines.append('descending: ' + _row(report['descending'], precision))
        lines.append('martinelli: ' + _poly(report['descending'], precision, var='k'))
    for key in ('quad_roots', 'cubic_roots'):
        if key in report:
            lines.append(f'{key}: ' + _row(report[key], precision))
    if 'roots' in report:
        lines.append('roots:')
        lines.extend(f'  {_value(r, precision)}' for r in report['roots'])
    if 'lifted_params' in report:
        params = report['lifted_params']
        lines.append('lifted_params: ' + ' '.join(f'{name}={_value(params[name], precision)}' for name in 'abcd'))
    if 'residual_max' in report:
        lines.append(f"residual_max: {_value(report['residual_max'], 3)}")
    return '\n'.join(lines)


def render_json(report):
    return json.dumps(report, indent=2)


def render(report, cfg):
    if cfg.output.format == 'json':
        return render_json(report)
    return render_text(report, cfg.output.precision)
