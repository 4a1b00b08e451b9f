/** Test doubles: a scripted fetch and canned API payloads (docs/api.md shapes). */

import type { FetchLike } from '../src/api.js';

export interface RecordedRequest {
  url: string;
  method: string;
  body: unknown;
}

export interface ScriptedResponse {
  status?: number;
  body: unknown;
}

export function makeFetch(script: ScriptedResponse[]): { fetchFn: FetchLike; requests: RecordedRequest[] } {
  const queue = [...script];
  const requests: RecordedRequest[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    requests.push({
      url,
      method: init?.method ?? 'GET',
      body: init?.body ? JSON.parse(init.body as string) : undefined,
    });
    const next = queue.shift();
    if (!next) {
      throw new Error(`unexpected request to ${url}`);
    }
    return new Response(JSON.stringify(next.body), {
      status: next.status ?? 200,
      headers: { 'Content-Type': 'application/json' },
    });
  };
  return { fetchFn, requests };
}

export const SPANISH_START = {
  conversation_id: 'conv-es-1',
  language: 'ES',
  welcome: { kind: 'welcome', text: '¡Hola! Pregúntame sobre errores comunes de OpenMP.' },
};

export const ENGLISH_START = {
  conversation_id: 'conv-en-1',
  language: 'EN',
  welcome: { kind: 'welcome', text: 'Hello! Ask me about common OpenMP mistakes.' },
};

export const LOOP_QUESTION = 'Can I change a variable inside a pragma omp loop?';

export const LOOP_ANSWER = {
  kind: 'answer',
  node_id: 'redefine-num-threads',
  text: 'It is explicitly forbidden to change the loop variable from inside a pragma omp loop; the runtime owns it.',
};

export const DEFAULT_REPLY = {
  kind: 'default',
  text: 'I did not understand the question. Please try again.',
};

export const SUGGESTION_REPLY = {
  kind: 'suggestion',
  node_id: 'redefine-num-threads',
  text: 'Did you mean: Can I change a variable inside a pragma omp loop?',
  suggestion: LOOP_QUESTION,
};

export const MISSING_OMP_FINDING = {
  rule_id: 'R-missing-omp',
  entry_id: 'missing-omp',
  line: 1,
  excerpt: '#pragma parallel for',
  severity: 'Problem',
  message: 'pragma uses an OpenMP keyword but omp is missing; the pragma is ignored',
  answer:
    'If the omp keyword is forgotten the entire pragma will be ignored: the compiler treats an unknown pragma as a no-op and the code silently runs sequentially.',
};

export const OVERSIZED_ERROR = {
  error: { code: 'body_too_large', message: 'request body exceeds 262144 bytes' },
};
