"""
gunicorn settings for the hypertype API.

Requests run numerical work in the worker itself (a full `suite` call can
take minutes), so workers follow the core count rather than 2n+1 and the
timeout is long.
"""
import multiprocessing
import os

from dotenv import load_dotenv

load_dotenv()

bind = os.environ.get('HYPERTYPE_BIND', '0.0.0.0:8000')
workers = int(os.environ.get('HYPERTYPE_WORKERS', multiprocessing.cpu_count()))
worker_class = "sync"
timeout = int(os.environ.get('HYPERTYPE_TIMEOUT', 600))
graceful_timeout = 30
keepalive = 2

# recycle workers; long suite runs grow the series caches
max_requests = 500
max_requests_jitter = 50

accesslog = "logs/gunicorn_access.log"
errorlog = "logs/gunicorn_error.log"
loglevel = os.environ.get('LOG_LEVEL', 'info').lower()
proc_name = "hypertype"

# request bodies are small JSON argument lists
limit_request_line = 4094
limit_request_fields = 50
