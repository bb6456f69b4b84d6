from flask import Flask, jsonify, request
import logging
import os
from werkzeug.exceptions import HTTPException

from hypertype.cli import SCHEMA, SUBCOMMANDS, execute
from hypertype.config import configure_logging, get_settings
from hypertype.errors import HypertypeError, UsageError
from hypertype.families import Family
from hypertype.series import SolutionKind
from hypertype.symmetry import enumerate_group, kummer_table

settings = get_settings()

app = Flask(__name__)

# Console logging always, the rotating file outside debug runs
logger = configure_logging(settings, to_file=os.environ.get('FLASK_DEBUG', '').lower() != 'true')
app.logger.handlers = list(logger.handlers)
app.logger.setLevel(logger.level)


def request_argv(subcommand, payload):
    """
    Turn a JSON body into a command line.

    The body is {"args": [...], "options": {...}}; options map to --flags,
    with true meaning a bare flag and false or null leaving it out.
    """
    if not isinstance(payload, dict):
        raise UsageError("request body must be a JSON object")
    args = payload.get('args', [])
    options = payload.get('options', {})
    if not isinstance(args, list) or not isinstance(options, dict):
        raise UsageError("'args' must be a list and 'options' an object")
    argv = [subcommand] + [str(a) for a in args]
    for name, value in options.items():
        if name == 'format':
            # JSON is the only wire format
            continue
        flag = '--' + str(name).replace('_', '-')
        if value is True:
            argv.append(flag)
        elif value is not False and value is not None:
            argv += [flag, str(value)]
    return argv


def error_response(status, kind, message):
    return jsonify({'schema': SCHEMA, 'error': kind, 'message': message}), status


@app.route('/health')
def health():
    return jsonify({'status': 'ok', 'schema': SCHEMA})


@app.route('/api/<subcommand>', methods=['POST'])
def run_command(subcommand):
    if subcommand not in SUBCOMMANDS:
        return error_response(404, 'usage', f"Unknown subcommand {subcommand!r}")
    payload = request.get_json(silent=True)
    if payload is None:
        payload = {}
    try:
        argv = request_argv(subcommand, payload)
        code, report, _ = execute(argv)
    except HypertypeError as e:
        app.logger.info("rejected %s: %s", subcommand, e)
        return error_response(400, e.kind, str(e))
    return jsonify(report), (200 if code == 0 else 422)


@app.route('/api/symmetries/<family>')
def symmetries(family):
    try:
        group = enumerate_group(Family.parse(family))
    except HypertypeError as e:
        return error_response(400, e.kind, str(e))
    return jsonify({'schema': SCHEMA, **group.to_dict()})


@app.route('/api/kummer/<kind>')
def kummer(kind):
    try:
        solution = SolutionKind.parse(kind if ':' in kind else f'2f1:{kind}')
        rows = kummer_table(solution)
    except HypertypeError as e:
        return error_response(400, e.kind, str(e))
    return jsonify({'schema': SCHEMA, 'kind': str(solution), 'expressions': [str(e) for e in rows]})


@app.errorhandler(HTTPException)
def http_error(e):
    return error_response(e.code, 'http', e.description)


@app.errorhandler(Exception)
def internal_error(e):
    app.logger.error("unhandled error on %s", request.path, exc_info=e)
    return error_response(500, 'internal', 'Internal server error')


if __name__ == '__main__':
    app.logger.setLevel(logging.DEBUG)
    app.run(debug=True)
