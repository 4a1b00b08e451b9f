/**
 * Typed client for the ompmentor HTTP API (see docs/api.md in the
 * service repository). All UI traffic goes through this module; nothing
 * else touches fetch, and the UI renders only these documented shapes.
 */

export type ReplyKind = 'welcome' | 'answer' | 'suggestion' | 'default';

export interface Reply {
  kind: ReplyKind;
  text: string;
  node_id?: string;
  suggestion?: string;
}

export interface ConversationStart {
  conversation_id: string;
  language: string;
  welcome: Reply;
}

export interface Finding {
  rule_id: string;
  entry_id: string;
  line: number;
  excerpt: string;
  severity: 'Problem' | 'Hint';
  message: string;
  answer: string | null;
}

export interface KbEntry {
  id: string;
  category: 'Performance' | 'Logical';
  title: string;
  reason: string;
  primary_variation: string;
  answer: string;
}

export interface Health {
  status: string;
  languages: string[];
  entry_count: number;
}

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiRequestError';
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseError(response: Response): Promise<ApiRequestError> {
  let code = 'error';
  let message = `request failed with status ${response.status}`;
  try {
    const body = await response.json();
    if (body && body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiRequestError(response.status, code, message);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  createConversation(language?: string): Promise<ConversationStart> {
    return this.post<ConversationStart>('/v1/conversations', language ? { language } : {});
  }

  sendMessage(conversationId: string, text: string): Promise<Reply> {
    return this.post<Reply>(`/v1/conversations/${conversationId}/messages`, { text });
  }

  advise(code: string): Promise<{ findings: Finding[] }> {
    return this.post<{ findings: Finding[] }>('/v1/advise', { code });
  }

  knowledgeBase(lang: string): Promise<{ entries: KbEntry[] }> {
    return this.request<{ entries: KbEntry[] }>(`/v1/kb?lang=${encodeURIComponent(lang)}`);
  }

  health(): Promise<Health> {
    return this.request<Health>('/v1/health');
  }
}
