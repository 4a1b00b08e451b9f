/**
 * View models for the chat session and the advise panel.
 *
 * All transcript and panel state lives here, independent of the DOM, so
 * the behavior is testable without a browser. Views subscribe and
 * re-render on every change. One message is in flight per conversation:
 * input stays disabled while `pending` is true.
 */

import { ApiClient, ApiRequestError, Finding, Reply } from './api.js';

export interface Bubble {
  role: 'user' | 'assistant';
  kind?: Reply['kind'];
  text: string;
  suggestion?: string;
}

type Listener = () => void;

class Observable {
  private listeners: Listener[] = [];

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  protected notify(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiRequestError) {
    return error.message;
  }
  return 'Could not reach the service.';
}

export class ChatSession extends Observable {
  bubbles: Bubble[] = [];
  pending = false;
  error: string | null = null;
  conversationId: string | null = null;
  language: string | null = null;
  private lastAttempt: (() => Promise<void>) | null = null;

  constructor(private readonly client: ApiClient) {
    super();
  }

  get started(): boolean {
    return this.conversationId !== null;
  }

  async start(language: string): Promise<void> {
    await this.attempt(async () => {
      const started = await this.client.createConversation(language);
      this.conversationId = started.conversation_id;
      this.language = started.language;
      this.bubbles.push({ role: 'assistant', kind: 'welcome', text: started.welcome.text });
    });
  }

  /** Empty input is blocked client-side; whitespace does not count. */
  canSend(text: string): boolean {
    return this.started && !this.pending && text.trim().length > 0;
  }

  async send(text: string): Promise<void> {
    const question = text.trim();
    if (!this.canSend(question) || this.conversationId === null) {
      return;
    }
    const id = this.conversationId;
    this.bubbles.push({ role: 'user', text: question });
    await this.attempt(async () => {
      const reply = await this.client.sendMessage(id, question);
      this.bubbles.push({
        role: 'assistant',
        kind: reply.kind,
        text: reply.text,
        suggestion: reply.suggestion,
      });
    });
  }

  /** A suggestion bubble resubmits its primary variation when clicked. */
  async acceptSuggestion(suggestion: string): Promise<void> {
    await this.send(suggestion);
  }

  /** Re-run the request behind the error banner. */
  async retry(): Promise<void> {
    const attempt = this.lastAttempt;
    if (attempt === null || this.pending) {
      return;
    }
    this.error = null;
    this.notify();
    await this.runPending(attempt);
  }

  private async attempt(action: () => Promise<void>): Promise<void> {
    this.lastAttempt = action;
    this.error = null;
    this.notify();
    await this.runPending(action);
  }

  private async runPending(action: () => Promise<void>): Promise<void> {
    this.pending = true;
    this.notify();
    try {
      await action();
      this.lastAttempt = null;
    } catch (error) {
      this.error = describe(error);
    } finally {
      this.pending = false;
      this.notify();
    }
  }
}

export class AdvisePanel extends Observable {
  /** null until the first scan; [] afterwards means an explicit empty state. */
  findings: Finding[] | null = null;
  pending = false;
  error: string | null = null;

  constructor(private readonly client: ApiClient) {
    super();
  }

  canSubmit(code: string): boolean {
    return !this.pending && code.trim().length > 0;
  }

  async submit(code: string): Promise<void> {
    if (!this.canSubmit(code)) {
      return;
    }
    this.pending = true;
    this.error = null;
    this.notify();
    try {
      const result = await this.client.advise(code);
      this.findings = result.findings;
    } catch (error) {
      this.error = describe(error);
    } finally {
      this.pending = false;
      this.notify();
    }
  }
}
